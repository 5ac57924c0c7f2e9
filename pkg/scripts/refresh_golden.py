"""Regenerate the CLI golden files from the demo configs.

Run after an intentional change to output formatting, then review the diff.
"""

import json
import sys
from pathlib import Path

from widthlab.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def golden_path(config: Path) -> Path:
    fmt = json.loads(config.read_text())["output"]
    return GOLDEN / f"{config.stem}.{fmt}"


def refresh() -> int:
    for config in sorted((GOLDEN / "configs").glob("*.json")):
        command = json.loads(config.read_text())["command"]
        out = golden_path(config)
        code = main([command, "--config", str(config), "--out", str(out)])
        print(f"{out.name}: exit {code}")
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(refresh())
