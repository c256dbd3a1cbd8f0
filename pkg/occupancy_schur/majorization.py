# Copyright 2026 The occupancy-schur Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""The majorization order on the probability simplex.

``a`` majorizes ``b`` when, with both sorted in descending order, every
prefix sum of ``a`` is at least the matching prefix sum of ``b``. The totals
agree automatically because both are simplex points.
"""

import enum
import logging

import numpy as np

from occupancy_schur import constants
from occupancy_schur.errors import DimensionMismatch, InvalidArgument
from occupancy_schur.prob import ProbVector, canonicalize, check_boxes

LOG = logging.getLogger(__name__)


class Relation(enum.Enum):
    MAJORIZES = "Majorizes"
    MAJORIZED_BY = "MajorizedBy"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def __str__(self):
        return self.value


class MajorizationVerdict(object):
    """Outcome of ``compare(a, b)``.

    ``gaps`` holds the prefix-sum differences ``A_k - B_k`` for
    ``k = 1 .. n-1``. ``worst_slack`` is the smallest gap in the direction
    that holds (``B_k - A_k`` for MajorizedBy) and the most negative gap
    ``A_k - B_k`` when the pair is incomparable.
    """

    def __init__(self, relation, worst_slack, gaps):
        self.relation = relation
        self.worst_slack = float(worst_slack)
        self.gaps = tuple(float(g) for g in gaps)

    @property
    def comparable(self):
        return self.relation is not Relation.INCOMPARABLE

    def __repr__(self):
        return "MajorizationVerdict(%s, worst_slack=%r)" % (
            self.relation.value,
            self.worst_slack,
        )

    def to_dict(self):
        return {
            "relation": self.relation.value,
            "worst_slack": self.worst_slack,
            "gaps": list(self.gaps),
        }


def _prefix_gaps(a, b):
    ca = canonicalize(a).entries
    cb = canonicalize(b).entries
    return (np.cumsum(ca) - np.cumsum(cb))[:-1]


def compare(a, b, tol=constants.MAJORIZATION_TOLERANCE):
    """Compare two simplex points under the majorization order.

    Both are sorted internally; the arguments are left untouched.
    """
    if a.n != b.n:
        raise DimensionMismatch("cannot compare vectors of length %d and %d" % (a.n, b.n))
    gaps = _prefix_gaps(a, b)
    if gaps.size == 0:
        return MajorizationVerdict(Relation.EQUAL, 0.0, gaps)
    a_over_b = bool(np.all(gaps >= -tol))
    b_over_a = bool(np.all(gaps <= tol))
    if a_over_b and b_over_a:
        relation, slack = Relation.EQUAL, gaps.min()
    elif a_over_b:
        relation, slack = Relation.MAJORIZES, gaps.min()
    elif b_over_a:
        relation, slack = Relation.MAJORIZED_BY, (-gaps).min()
    else:
        relation, slack = Relation.INCOMPARABLE, gaps.min()
    return MajorizationVerdict(relation, slack, gaps)


def majorizes(a, b, tol=constants.MAJORIZATION_TOLERANCE):
    """True when ``a`` majorizes ``b`` (equality included)."""
    return compare(a, b, tol).relation in (Relation.MAJORIZES, Relation.EQUAL)


def t_transform(p, i, j, lam):
    """Average entries ``i`` and ``j`` of ``p`` toward each other.

    ``q_i = lam p_i + (1 - lam) p_j`` and ``q_j = lam p_j + (1 - lam) p_i``;
    the result is always majorized by ``p``. Indices are 0-based.
    """
    n = p.n
    for name, index in (("i", i), ("j", j)):
        if isinstance(index, bool) or int(index) != index or not 0 <= index < n:
            raise InvalidArgument("index %s=%r is out of range for %d boxes" % (name, index, n))
    if i == j:
        raise InvalidArgument("t_transform needs two distinct indices, got %r twice" % (i,))
    if not 0.0 <= lam <= 1.0:
        raise InvalidArgument("lambda must lie in [0, 1], got %r" % (lam,))
    q = p.entries.copy()
    q[i] = lam * p.entries[i] + (1.0 - lam) * p.entries[j]
    q[j] = lam * p.entries[j] + (1.0 - lam) * p.entries[i]
    return ProbVector(q)


def sample_majorized(p, mixes, rng):
    """Random convex mixture of ``mixes`` random permutations of ``p``.

    A convex combination of permutation matrices is doubly stochastic, so the
    result is majorized by ``p``.
    """
    if isinstance(mixes, bool) or int(mixes) != mixes or mixes < 1:
        raise InvalidArgument("mixes must be a positive integer, got %r" % (mixes,))
    weights = rng.dirichlet(np.ones(int(mixes)))
    q = np.zeros(p.n)
    for weight in weights:
        q += weight * p.entries[rng.permutation(p.n)]
    return ProbVector(q)


def uniform(n):
    n = check_boxes(n)
    return ProbVector(np.full(n, 1.0 / n))


def point_mass(n):
    n = check_boxes(n)
    entries = np.zeros(n)
    entries[0] = 1.0
    return ProbVector(entries)
