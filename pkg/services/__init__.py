"""Business orchestration layer between the CLI and the oracle/pipelines. No logic in the CLI."""

from services.simulation_service import SimulationService

__all__ = ["SimulationService"]
