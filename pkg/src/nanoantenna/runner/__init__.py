"""Sweeps, figure presets, serialization and the command-line entry point."""

from .csvio import read_csv, write_csv
from .presets import PRESETS, preset
from .svg import render_svg
from .sweep import SweepError, SweepResult, SweepSpec, run_sweep
