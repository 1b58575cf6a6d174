from dataclasses import dataclass, asdict
from typing import Optional

from istanbul_pricer.schemas.derived import DerivedParams

THEOREM1 = 'theorem1'
THEOREM2 = 'theorem2'
GAC_COINCIDENCE = 'gac_coincidence'

CRUDE = 'crude'
CV = 'cv'


@dataclass(frozen=True)
class ApproxPrice:
    """
    closed-form approximation of the geometric Istanbul call
    """
    value: float
    regime: str
    coefficients: Optional[DerivedParams] = None
    perturbed: bool = False

    def as_dict(self):
        return {
            'value': self.value,
            'regime': self.regime,
            'perturbed': self.perturbed,
            'coefficients': self.coefficients.as_dict() if self.coefficients else None,
        }


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    evaluations: int

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class PriceEstimate:
    """
    Monte-Carlo estimate; std_error is the sample standard deviation of the
    per-path quantities over sqrt(paths)
    """
    value: float
    std_error: float
    paths: int
    method: str
    theta_star: Optional[float] = None
    degenerate_control: bool = False

    def as_dict(self):
        return asdict(self)
