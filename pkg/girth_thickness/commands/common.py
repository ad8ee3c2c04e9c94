import argparse
import json
import sys
from enum import IntEnum
from pathlib import Path

from pydantic import BaseModel


class ExitCode(IntEnum):
    OK = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2
    EXHAUSTED = 3
    BUDGET_EXCEEDED = 4


def positive_int(raw: str) -> int:
    """Integer flag that also accepts scientific notation such as 1e5."""
    try:
        value = float(raw) if any(c in raw for c in ".eE") else int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{raw!r} is not a number")
    if value != int(value) or value < 1:
        raise argparse.ArgumentTypeError(f"{raw!r} is not a positive integer")
    return int(value)


def positive_float(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{raw!r} is not a number")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{raw!r} must be positive")
    return value


def print_model(model: BaseModel):
    """Print a pydantic model as compact JSON on stdout."""
    sys.stdout.write(model.model_dump_json() + "\n")


def print_json(payload: dict):
    sys.stdout.write(json.dumps(payload) + "\n")


def write_text(path: str, content: str):
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(content, encoding="utf-8")
