#!/usr/bin/env python3
"""Run the full verification suite and write a JSON report.

Usage: python scripts/run_verification.py [seed] [samples] [out.json]
"""

import sys

from g2cert.report import exit_code, render_text, serialize
from g2cert.suite import SuiteConfig, run_all


def main() -> int:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    samples = int(sys.argv[2]) if len(sys.argv) > 2 else 100
    out = sys.argv[3] if len(sys.argv) > 3 else "verification_report.json"
    cfg = SuiteConfig(seed=seed, samples=samples)
    reports = run_all(cfg)
    sys.stdout.write(render_text(reports, cfg))
    with open(out, "wb") as fh:
        fh.write(serialize(reports, cfg))
    print(f"wrote {out}")
    return exit_code(reports)


if __name__ == "__main__":
    sys.exit(main())
