"""Name-based access to the five pseudoinverse methods."""

import enum

from .baselines import pinv_greville, pinv_gso_qr, pinv_hyperpower, pinv_svd_reference
from .geninv import pinv_geninv

__all__ = ["PinvAlgorithm", "ALGORITHM_NAMES", "compute_pinv"]


class PinvAlgorithm(enum.Enum):
    GENINV = "geninv"
    GREVILLE = "greville"
    GSO_QR = "gso-qr"
    HYPERPOWER = "hyperpower"
    SVD = "svd"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            valid = ", ".join(a.value for a in cls)
            raise ValueError(f"unknown algorithm {name!r}; choose from {valid}") from None

    def __call__(self, g, cfg=None):
        """Pseudoinverse of ``g``; ``cfg`` is the method's own config type."""
        return _FUNCS[self](g, cfg)


# greville takes a scalar tolerance rather than a config object
_FUNCS = {
    PinvAlgorithm.GENINV: pinv_geninv,
    PinvAlgorithm.GREVILLE: lambda g, cfg=None: pinv_greville(g) if cfg is None else pinv_greville(g, cfg),
    PinvAlgorithm.GSO_QR: pinv_gso_qr,
    PinvAlgorithm.HYPERPOWER: pinv_hyperpower,
    PinvAlgorithm.SVD: pinv_svd_reference,
}

ALGORITHM_NAMES = tuple(a.value for a in PinvAlgorithm)


def compute_pinv(g, algorithm="geninv", cfg=None):
    return PinvAlgorithm.parse(algorithm)(g, cfg)
