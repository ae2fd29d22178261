"""Unit tests (tools), node-level tests (agents), mocked LLM."""
