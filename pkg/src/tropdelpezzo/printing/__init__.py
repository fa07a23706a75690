"""Rich terminal tracing utilities."""

from tropdelpezzo.printing.events import Stage
from tropdelpezzo.printing.tracer import PipelineTracer

__all__ = ["PipelineTracer", "Stage"]
