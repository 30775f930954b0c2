"""Write every regenerated table to a directory, one file per table and format."""
import argparse
from dataclasses import dataclass
from pathlib import Path

from weakfano.cli import emit_rows
from weakfano.tables import TABLES, generate


@dataclass
class Config:
    out_dir: Path = Path("tables_out")
    formats: tuple[str, ...] = ("text", "csv", "json")


def main(cfg: Config) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    ext = {"text": "txt", "csv": "csv", "json": "json"}
    for table_id in TABLES:
        rows = generate(table_id)
        for fmt in cfg.formats:
            (cfg.out_dir / f"{table_id}.{ext[fmt]}").write_text(emit_rows(rows, fmt), encoding="utf-8")
        print(f"{table_id:14s} {len(rows):3d} rows")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out-dir", type=Path, default=Config.out_dir)
    p.add_argument("--formats", nargs="+", choices=("text", "csv", "json"), default=list(Config.formats))
    a = p.parse_args()
    main(Config(a.out_dir, tuple(a.formats)))
