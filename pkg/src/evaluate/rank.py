"""Exact rank and determinant of ℓ-coefficient matrices."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from loguru import logger
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from src.construct import CoeffTable, Params
from src.errors import DimensionError
from src.evaluate.forms import form_coefficients

Pair = Tuple[int, int]


def _as_domain_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    return DomainMatrix([[ZZ(v) for v in row] for row in rows], (len(rows), len(rows[0])), ZZ)


def _rank(columns: List[Sequence[int]]) -> int:
    if not columns:
        return 0
    return _as_domain_matrix([list(row) for row in zip(*columns)]).convert_to(QQ).rank()


@dataclass
class RankReport:
    """Matrix [ℓ_{p_j,k_j,i}] with rows i = 0..b+h and one column per selected pair."""

    selection: List[Pair]
    matrix: List[List[int]]
    determinant: int
    rank: int
    size: int
    columns: Dict[Pair, Tuple[int, ...]] = field(default_factory=dict, repr=False)

    @property
    def invertible(self) -> bool:
        return self.determinant != 0

    def to_json(self) -> Dict[str, Any]:
        return {
            "selection": [list(pair) for pair in self.selection],
            "size": self.size,
            "rank": self.rank,
            "determinant": str(self.determinant),
            "invertible": self.invertible,
            "matrix": [[str(v) for v in row] for row in self.matrix],
        }


def greedy_selection(table: CoeffTable, params: Params) -> List[Pair]:
    """b+h+1 admissible pairs, those raising the rank first in (p, k) order, then padding.

    Raises:
        DimensionError: If the window holds fewer than b+h+1 pairs
    """
    size = table.b + params.h + 1
    pairs = params.admissible_pairs()
    if len(pairs) < size:
        raise DimensionError(f"only {len(pairs)} admissible pairs for a {size}x{size} matrix")

    chosen: List[Pair] = []
    columns: List[Tuple[int, ...]] = []
    for pair in pairs:
        if len(chosen) == size:
            break
        column = form_coefficients(table, params, *pair)[:size]
        if _rank(columns + [column]) > len(columns):
            chosen.append(pair)
            columns.append(column)
    if len(chosen) < size:
        logger.warning(f"greedy selection reached rank {len(chosen)} of {size}; padding")
        rest = [pair for pair in pairs if pair not in chosen]
        chosen.extend(rest[: size - len(chosen)])
    return chosen


def rank_matrix(table: CoeffTable, params: Params, selection: Sequence[Pair]) -> RankReport:
    """Determinant and rank of the (b+h+1)-square matrix of ℓ coefficients.

    Invertibility is reported, not required.

    Raises:
        DimensionError: If the selection does not have b+h+1 distinct pairs
        WindowError: If a pair is not admissible
    """
    size = table.b + params.h + 1
    selection = [tuple(pair) for pair in selection]
    if len(selection) != size or len(set(selection)) != size:
        raise DimensionError(f"need {size} distinct (p, k) pairs, got {len(selection)}")

    columns = {pair: form_coefficients(table, params, *pair) for pair in selection}
    matrix = [[columns[pair][i] for pair in selection] for i in range(size)]
    dm = _as_domain_matrix(matrix)
    determinant = int(dm.det())
    rank = dm.convert_to(QQ).rank()
    if determinant:
        logger.success(f"{size}x{size} form matrix is invertible")
    else:
        logger.warning(f"{size}x{size} form matrix has rank {rank}")
    return RankReport(list(selection), matrix, determinant, rank, size, columns)
