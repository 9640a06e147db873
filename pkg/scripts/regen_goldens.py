"""Rewrite tests/golden/*.out from the CLI corpus.  Review the diff before committing."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from cli_corpus import CASES, GOLDEN_DIR, render  # noqa: E402


def main():
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, argv in CASES:
        (GOLDEN_DIR / f"{name}.out").write_text(render(argv), encoding="utf-8", newline="\n")
    print(f"wrote {len(CASES)} goldens to {GOLDEN_DIR}")


if __name__ == "__main__":
    main()
