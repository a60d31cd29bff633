"""Replay every failure record in a suite report and say which still fail.

    python3 scripts/replay_records.py reports/random.json
"""

from __future__ import annotations

import argparse
import json

from edgecolor import suites


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("report")
    args = ap.parse_args()
    with open(args.report) as fh:
        data = json.load(fh)
    records = data.get("records", [])
    still = 0
    for rec in records:
        bad = suites.replay(rec)
        still += bad
        print(f"{rec['check']:<24} {'reproduces' if bad else 'no longer fails'}")
    for line in data.get("notes", {}).get("candidates", []):
        bad = suites.replay_candidate(line)
        still += bad
        print(f"{'conjecture candidate':<24} {'reproduces' if bad else 'witness found'}")
    print(f"{len(records)} record(s), {still} reproducing")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
