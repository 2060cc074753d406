"""scikit-learn transformers over batches of mass vectors.

Each row of ``X`` is one mass function in binary subset order, so a batch
over an n-element frame has 2**n columns.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .errors import DomainError
from .isopignistic import FORMS, IsoDecomposition, decompose, reconstruct
from .lattice import Frame, validate
from .transforms import betp


def _frame_for(width: int) -> Frame:
    n = width.bit_length() - 1
    if n < 1 or width != 1 << n:
        raise DomainError(f"mass vectors need 2^n columns, got {width}")
    return Frame(n)


class _MassBatchMixin:
    def _fit_frame(self, X):
        X = check_array(X, dtype=float)
        self.frame_ = _frame_for(X.shape[1])
        self.n_features_in_ = X.shape[1]
        return X

    def _rows(self, X):
        check_is_fitted(self, "frame_")
        X = check_array(X, dtype=float)
        if X.shape[1] != self.n_features_in_:
            raise DomainError(f"expected {self.n_features_in_} columns, got {X.shape[1]}")
        return [validate(row, self.frame_) for row in X]


class IsopignisticDecomposer(_MassBatchMixin, TransformerMixin, BaseEstimator):
    """Rows of masses to rows of isopignistic functions and back.

    The output row holds the empty-set mass at column 0, the propensity on
    the singleton columns and the commitment (``form``) on the others.
    """

    def __init__(self, form: str = "tau"):
        self.form = form

    def fit(self, X, y=None):
        if self.form not in FORMS:
            raise DomainError(f"form must be one of {FORMS}, got {self.form!r}")
        self._fit_frame(X)
        return self

    def transform(self, X):
        return np.array([decompose(m, self.form).vector() for m in self._rows(X)])

    def inverse_transform(self, X):
        check_is_fitted(self, "frame_")
        X = check_array(X, dtype=float)
        return np.array([reconstruct(IsoDecomposition.from_vector(row, self.form)).masses for row in X])


class PignisticTransformer(_MassBatchMixin, TransformerMixin, BaseEstimator):
    """Rows of masses to pignistic probabilities over the n elements."""

    def __init__(self, normalize: bool = False):
        self.normalize = normalize

    def fit(self, X, y=None):
        self._fit_frame(X)
        return self

    def transform(self, X):
        return np.array([betp(m, normalize=self.normalize).probs for m in self._rows(X)])

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "frame_")
        return np.array([f"betp_w{i + 1}" for i in range(self.frame_.n)], dtype=object)
