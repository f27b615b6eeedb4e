"""Regenerate the bundled fixture files from the catalog.

    python scripts/make_fixtures.py [--check]

With --check nothing is written; the exit status is 1 when a bundled
file differs from what the catalog produces.
"""

import argparse
import sys

from gradedquot.catalog import CATALOG
from gradedquot.fixtures import bundled_dir, dumps_fixture


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args(argv)
    out = bundled_dir()
    stale = []
    for name, build in sorted(CATALOG.items()):
        text = dumps_fixture(build())
        path = out / f"{name}.json"
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            path.write_text(text)
            print(f"wrote {path}")
    if stale:
        print("stale fixtures: " + ", ".join(stale))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
