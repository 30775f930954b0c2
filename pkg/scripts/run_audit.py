"""Run the golden-file audit and print a one-line summary per check, with timing."""
import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from weakfano.audit import GOLDEN_DIR, audit_ok, run_audit


@dataclass
class Config:
    golden_dir: Path = GOLDEN_DIR
    verbose: bool = False


def main(cfg: Config) -> int:
    t = time.perf_counter()
    results = run_audit(cfg.golden_dir)
    for r in results:
        print(f"{r.table_id:22s} {r.status:9s} diffs={len(r.diffs)} notes={len(r.notes)}")
        if cfg.verbose:
            for key, want, got in r.diffs:
                print(f"    {key}: expected {want!r}, computed {got!r}")
            for n in r.notes:
                print(f"    note: {n}")
    ok = audit_ok(results)
    print(f"{'ok' if ok else 'MISMATCH'} in {time.perf_counter() - t:.2f} s")
    return 0 if ok else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--golden-dir", type=Path, default=GOLDEN_DIR)
    p.add_argument("-v", "--verbose", action="store_true")
    a = p.parse_args()
    sys.exit(main(Config(a.golden_dir, a.verbose)))
