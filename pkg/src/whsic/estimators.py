"""scikit-learn style wrappers around the search and the overlap map."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .overlaps import extract_fiducial, overlaps_from_fiducial
from .search import SearchConfig, sic_search
from .validation import check_dimension, check_fiducial


class SICSearch(BaseEstimator):
    """Frame-potential search for a SIC fiducial in dimension ``d``.

    Parameters
    ----------
    d : int
        Hilbert-space dimension.
    max_restarts : int
        Upper bound on random restarts; the search stops at the first success.
    max_iter : int
        Iteration cap for each local optimiser phase.
    target_gap : float
        Success threshold on ``frame_potential - 2/(d(d+1))``.
    restrict_zauner : bool
        Search inside the largest eigenspace of the Zauner matrix.
    objective : {"potential", "quartic"}
    random_state : int
        Seed; identical seeds give identical results.

    Attributes
    ----------
    fiducial_ : ndarray of shape (d,)
    overlaps_ : ndarray of shape (d, d)
    potential_gap_ : float
    quartic_residual_ : float
    n_restarts_ : int
    success_ : bool
    report_ : SearchReport

    Examples
    --------
    >>> est = SICSearch(d=3, random_state=0).fit()
    >>> bool(est.success_)
    True
    """

    def __init__(self, d=3, max_restarts=64, max_iter=500, target_gap=1e-11,
                 restrict_zauner=False, objective="potential", random_state=0):
        self.d = d
        self.max_restarts = max_restarts
        self.max_iter = max_iter
        self.target_gap = target_gap
        self.restrict_zauner = restrict_zauner
        self.objective = objective
        self.random_state = random_state

    def fit(self, X=None, y=None):
        """Run the search. ``X`` and ``y`` are ignored."""
        cfg = SearchConfig(
            dim=check_dimension(self.d),
            max_restarts=self.max_restarts,
            max_iters=self.max_iter,
            target_gap=self.target_gap,
            rng_seed=0 if self.random_state is None else int(self.random_state),
            restrict_zauner=self.restrict_zauner,
            objective=self.objective,
        )
        report = sic_search(cfg)
        self.report_ = report
        self.fiducial_ = report.fiducial
        self.overlaps_ = report.overlaps
        self.potential_gap_ = report.potential_gap
        self.quartic_residual_ = report.quartic_residual
        self.n_restarts_ = report.restarts_used
        self.success_ = report.success
        return self

    def score(self, X=None, y=None):
        """Negative potential gap, so that larger is better."""
        check_is_fitted(self, "report_")
        return -self.potential_gap_


class OverlapEncoder(TransformerMixin, BaseEstimator):
    """Map fiducial vectors to flattened overlap tables and back.

    ``transform`` takes an array of shape ``(n, d)`` of unit vectors and
    returns ``(n, d*d)`` complex rows ``c.ravel()``. ``inverse_transform``
    recovers fiducials (with ``v_0 > 0``) from certified SIC tables.
    """

    def __init__(self, normalize=False):
        self.normalize = normalize

    def _rows(self, X):
        X = np.asarray(X, dtype=complex)
        if X.ndim == 1:
            X = X[None, :]
        if X.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {X.shape}")
        return X

    def fit(self, X, y=None):
        X = self._rows(X)
        self.d_ = check_dimension(X.shape[1])
        self.n_features_in_ = self.d_
        return self

    def transform(self, X):
        check_is_fitted(self, "d_")
        X = self._rows(X)
        if X.shape[1] != self.d_:
            raise ValueError(f"expected vectors of length {self.d_}, got {X.shape[1]}")
        out = [
            overlaps_from_fiducial(check_fiducial(x, normalize=self.normalize)).ravel()
            for x in X
        ]
        return np.array(out)

    def inverse_transform(self, C):
        check_is_fitted(self, "d_")
        C = np.asarray(C, dtype=complex).reshape(-1, self.d_, self.d_)
        return np.array([extract_fiducial(c) for c in C])
