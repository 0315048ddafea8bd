"""
The linking matrix of the linear plumbing and the matrix A_{p,q} = -p M^{-1},
computed from a closed form and cross-checked against exact inversion.
"""
import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.polys.matrices import DomainMatrix

from lenscontact.core.errors import InternalConsistencyError
from lenscontact.models.schemas import ContinuedFraction, IntMatrix
from lenscontact.services.contfrac_service import contfrac_service

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def _apq_rows(coeffs: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    n = len(coeffs)
    tails = contfrac_service.tail_determinants(coeffs)
    heads = contfrac_service.tail_determinants(coeffs[::-1])[::-1]   # heads[i] = d(a[:i])
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = heads[i] * tails[j + 1]
    return tuple(tuple(row) for row in rows)


def _domain(matrix: IntMatrix) -> DomainMatrix:
    return DomainMatrix([[ZZ(x) for x in row] for row in matrix.rows], (matrix.size, matrix.size), ZZ)


class TridiagService:

    def linking_matrix(self, cf: ContinuedFraction) -> IntMatrix:
        n = cf.n
        rows = [[0] * n for _ in range(n)]
        for i, a in enumerate(cf.coeffs):
            rows[i][i] = a
            if i + 1 < n:
                rows[i][i + 1] = rows[i + 1][i] = 1
        return IntMatrix(rows=tuple(tuple(row) for row in rows))

    def apq_closed_form(self, cf: ContinuedFraction) -> IntMatrix:
        return IntMatrix(rows=_apq_rows(cf.coeffs))

    def apq_oracle(self, cf: ContinuedFraction) -> IntMatrix:
        inverse = _domain(self.linking_matrix(cf)).to_field().inv().to_Matrix()
        rows: List[List[int]] = []
        for i in range(cf.n):
            row = []
            for j in range(cf.n):
                entry = -cf.p * inverse[i, j]
                if not entry.is_Integer:
                    raise InternalConsistencyError(
                        f"-p M^-1 has non-integral entry {entry} at ({i + 1},{j + 1})",
                        coeffs=list(cf.coeffs),
                    )
                row.append(int(entry))
            rows.append(row)
        return IntMatrix(rows=tuple(tuple(row) for row in rows))

    def determinant(self, matrix: IntMatrix) -> int:
        return int(_domain(matrix).det())

    def is_positive_definite(self, matrix: IntMatrix) -> bool:
        return bool(Matrix(matrix.rows).is_positive_definite)

    def quadratic_form(self, matrix: IntMatrix, vector: Sequence[int]) -> int:
        n = matrix.size
        return sum(
            vector[i] * matrix.rows[i][j] * vector[j]
            for i in range(n) if vector[i]
            for j in range(n) if vector[j]
        )

    def crosscheck(self, cf: ContinuedFraction) -> IntMatrix:
        closed = self.apq_closed_form(cf)
        oracle = self.apq_oracle(cf)
        if closed != oracle:
            logger.error(f"A_pq mismatch for {list(cf.coeffs)}")
            raise InternalConsistencyError(
                "closed form and exact inverse disagree",
                coeffs=list(cf.coeffs), closed=closed.rows, oracle=oracle.rows,
            )
        return closed


tridiag_service = TridiagService()
