"""Verdict grid over every admissible (g,d) and containment, secant flags fixed."""
import argparse
from dataclasses import dataclass

from weakfano.classifier import P_ALL, CurveInstance, classify

SHORT = {"weak_fano": "W", "not_weak_fano": "N", "insufficient_data": "?"}
PLACES = ("hyperplane", "smooth_quadric_section", "smooth_cubic_section", "unknown")


@dataclass
class Config:
    line: str = "no"
    conic: str = "no"


def main(cfg: Config) -> None:
    print(f"4-secant line: {cfg.line}, 7-secant conic: {cfg.conic}   (W weak, N not weak, ? undecided)")
    print(f"{'g,d':>7s}  " + "  ".join(p[:10].ljust(10) for p in PLACES))
    for g, d in sorted(P_ALL, key=lambda p: (p[1], p[0])):
        cells = [SHORT[classify(CurveInstance(g, d, p, cfg.line, cfg.conic)).verdict] for p in PLACES]
        print(f"{g:>3d},{d:<3d}  " + "  ".join(c.ljust(10) for c in cells))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--line", choices=("yes", "no", "unknown"), default="no")
    p.add_argument("--conic", choices=("yes", "no", "unknown"), default="no")
    a = p.parse_args()
    main(Config(a.line, a.conic))
