"""JSON artifacts: deterministic encoding and table persistence."""

import json
from pathlib import Path
from typing import Any, Dict, Optional

from loguru import logger

from src.construct import CoeffTable, Params, TailExpansion
from src.errors import InvalidInputError


def dumps(payload: Any) -> str:
    """Sorted-key JSON; big integers are expected to be strings already."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path: Path, payload: Any) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(payload), encoding="utf-8")
    logger.info(f"wrote {path}")


def read_json(path: Path) -> Dict[str, Any]:
    """Raises OSError for unreadable files and json.JSONDecodeError for malformed ones."""
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def save_table(path: Path, table: CoeffTable, tail: Optional[TailExpansion] = None) -> None:
    write_json(path, table.to_json(tail))


def load_table(path: Path, params: Optional[Params] = None) -> CoeffTable:
    table = CoeffTable.from_json(read_json(path))
    if params is not None and (table.a, table.n) != (params.a, params.n):
        raise InvalidInputError(
            f"table {path} has shape a={table.a}, n={table.n} but params ask for "
            f"a={params.a}, n={params.n}"
        )
    return table
