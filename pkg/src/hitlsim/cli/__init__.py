"""CLI layer for hitlsim.

Usage:
    hitlsim eval --gt gt.csv --pred pred.csv --format json
    hitlsim simulate --config sim.toml --out run.jsonl --seed 7
    hitlsim metrics --log run.jsonl
"""

from hitlsim.cli.app import app, main
from hitlsim.cli.context import create_context
from hitlsim.cli.options import FormatOption, IouOption, LogLevelOption, ModeOption

__all__ = [
    "FormatOption",
    "IouOption",
    "LogLevelOption",
    "ModeOption",
    "app",
    "create_context",
    "main",
]
