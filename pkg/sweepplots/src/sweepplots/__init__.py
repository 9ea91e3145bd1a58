"""sweepplots: static figures from qaflow sweep CSV files."""

from .render import (
    EmptyInputError,
    PlotSpec,
    SchemaMismatchError,
    SweepPoint,
    read_rows,
    render,
)

__version__ = "0.1.0"
