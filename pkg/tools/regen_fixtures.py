#!/usr/bin/env python3
"""Regenerate the shipped JSON fixtures under ``src/postlie/data``.

The fixtures are derived artifacts: every catalog algebra exported in the
interchange format, plus the bundled sample products/operators and the
bracket tables they induce.  Tests compare the shipped bytes against fresh
exports, so re-run this script whenever catalog recipes or samples change.
"""

from __future__ import annotations

import argparse
import pathlib
import sys

from postlie import interchange
from postlie.catalog import catalog_ids, get_entry
from postlie.samples import SAMPLES

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "src" / "postlie" / "data"


def generate() -> dict[pathlib.Path, str]:
    files: dict[pathlib.Path, str] = {}

    for entry_id in catalog_ids():
        entry = get_entry(entry_id)
        if entry.builder is None:
            continue
        alg = entry.build()
        files[DATA_DIR / "catalog" / f"{entry_id}.json"] = interchange.serialize(
            alg, name=entry_id
        )

    for sample_id, sample in SAMPLES.items():
        base = DATA_DIR / "samples"
        files[base / f"{sample_id}_product.json"] = interchange.serialize(
            sample.product, name=sample_id
        )
        files[base / f"{sample_id}_g.json"] = interchange.serialize(
            sample.g_bracket(), name=f"{sample_id}_g"
        )
        if sample.operator is not None:
            files[base / f"{sample_id}_operator.json"] = interchange.serialize(
                sample.operator, name=f"{sample_id}_R"
            )

    return files


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--check",
        action="store_true",
        help="verify the shipped files match regeneration instead of writing",
    )
    args = parser.parse_args(argv)

    files = generate()
    stale = []
    for path, text in sorted(files.items()):
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                stale.append(path)
        else:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path.relative_to(DATA_DIR.parent.parent.parent)}")

    if args.check:
        if stale:
            for path in stale:
                print(f"stale: {path}", file=sys.stderr)
            return 1
        print(f"{len(files)} fixture files up to date")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
