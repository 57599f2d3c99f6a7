"""
scikit-learn style wrappers.

Samples are braids (``BraidWord``, a signed-integer string, or a sequence of
signed ints).  The transformers are stateless apart from validating the strand
count seen in ``fit``; ``KernelSearch`` runs the randomized search in ``fit``.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .braid import BraidWord, parse
from .hecke import projlength, represent
from .homfly import homfly
from .laurent import ZZ, Ring
from .search import search, verify_kernel


def check_braid(x, n: Optional[int] = None) -> BraidWord:
    """Coerce one sample to a ``BraidWord`` on ``n`` strands (if given)."""
    if isinstance(x, BraidWord):
        b = x
    elif isinstance(x, str):
        b = parse(x, n=n)
    else:
        try:
            b = BraidWord.from_ints(n or max((abs(int(k)) for k in x), default=0) + 1,
                                    [int(k) for k in x])
        except TypeError:
            raise TypeError(f"cannot read a braid from {type(x).__name__}") from None
    if n is not None and b.n != n:
        if b.n > n:
            raise ValueError(f"braid on {b.n} strands, expected at most {n}")
        b = b.with_strands(n)
    return b


def check_braids(X, n: Optional[int] = None) -> list[BraidWord]:
    """Validate a collection of braid samples; a single braid is rejected."""
    if isinstance(X, (str, BraidWord)):
        raise ValueError("expected a collection of braids, got a single braid")
    out = [check_braid(x, n) for x in X]
    if not out:
        raise ValueError("found an empty collection of braids")
    return out


def _ring(modulus: Optional[int]) -> Ring:
    return ZZ if modulus is None else Ring.mod(modulus)


class HeckeRepresentation(TransformerMixin, BaseEstimator):
    """Map braids to their Hecke vectors.

    Parameters
    ----------
    n_strands : int, optional
        Strand count; inferred as the largest seen in ``fit`` when omitted.
    modulus : int, optional
        Work over ``Z/mZ``; ``None`` keeps exact integers.
    threads : int
        Worker threads for each representation.
    """

    def __init__(self, n_strands: Optional[int] = None, modulus: Optional[int] = None,
                 threads: int = 1):
        self.n_strands = n_strands
        self.modulus = modulus
        self.threads = threads

    def fit(self, X, y=None):
        braids = check_braids(X, self.n_strands)
        self.n_strands_ = self.n_strands or max(b.n for b in braids)
        self.ring_ = _ring(self.modulus)
        return self

    def transform(self, X) -> list:
        check_is_fitted(self, "n_strands_")
        return [represent(b, self.ring_, threads=self.threads)
                for b in check_braids(X, self.n_strands_)]

    def score_samples(self, X) -> np.ndarray:
        """Projlength of each image (0 for a monomial-flat vector)."""
        return np.array([projlength(v) for v in self.transform(X)], dtype=np.int64)


class HomflyTransformer(TransformerMixin, BaseEstimator):
    """Map braids to HOMFLY-PT polynomials of their closures."""

    def __init__(self, threads: int = 1):
        self.threads = threads

    def fit(self, X, y=None):
        check_braids(X)
        self.fitted_ = True
        return self

    def transform(self, X) -> list:
        check_is_fitted(self, "fitted_")
        return [homfly(b, threads=self.threads) for b in check_braids(X)]


class KernelSearch(BaseEstimator):
    """Randomized search for kernel elements; ``fit`` ignores ``X``.

    After fitting, ``witnesses_`` holds the verified kernel braids and
    ``log_`` the per-generation records.  ``predict`` tells whether braids
    map to the identity modulo ``modulus``.
    """

    def __init__(self, n_strands: int = 3, modulus: int = 2, bucket_capacity: int = 64,
                 max_garside_length: int = 8, samples_per_step: int = 2,
                 mode: str = "min", threads: int = 1, random_state: int = 0):
        self.n_strands = n_strands
        self.modulus = modulus
        self.bucket_capacity = bucket_capacity
        self.max_garside_length = max_garside_length
        self.samples_per_step = samples_per_step
        self.mode = mode
        self.threads = threads
        self.random_state = random_state

    def fit(self, X=None, y=None):
        result = search(self.n_strands, self.modulus, self.bucket_capacity,
                        self.max_garside_length, self.samples_per_step,
                        self.random_state, self.mode, self.threads)
        self.witnesses_ = result.witnesses
        self.log_ = result.generations
        self.truncated_ = result.truncated
        return self

    def predict(self, X) -> np.ndarray:
        return np.array([verify_kernel(b, self.modulus)
                         for b in check_braids(X, self.n_strands)], dtype=bool)
