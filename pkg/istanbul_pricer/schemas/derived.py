from dataclasses import dataclass, field
from typing import Dict

K_GE_B = 'K_ge_B'
K_LT_B = 'K_lt_B'
REGIMES = (K_GE_B, K_LT_B)


@dataclass(frozen=True)
class DerivedParams:
    """
    notation of the approximation formulas, computed once by derive_params
    """
    regime: str
    drift_rn: float
    mu: float
    b: float
    a: float
    h: float
    c: float
    d: float
    e: float
    k: float
    l: float
    w: float
    z: Dict[int, float] = field(default_factory=dict)

    def as_dict(self):
        """
        flatten to a json-friendly dict
        :return:
        """
        result = {name: getattr(self, name) for name in
                  ('regime', 'drift_rn', 'mu', 'b', 'a', 'h', 'c', 'd', 'e', 'k', 'l', 'w')}
        result.update({f'z{i}': value for i, value in sorted(self.z.items())})
        return result
