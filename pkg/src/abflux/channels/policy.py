"""
Truncation policy
Limits and tolerances for the adaptive channel sums
"""

from pydantic import BaseModel, ConfigDict, Field


class TruncationPolicy(BaseModel):
    """
    Adaptive truncation settings.

    A sum stops after `consecutive_below` successive order bands each add
    less than `rel_tol` of the running magnitude; q_max caps q~ and m_max
    caps |m|.
    """
    model_config = ConfigDict(frozen=True)

    q_max: int = Field(80, ge=1)
    m_max: int = Field(120, ge=1)
    rel_tol: float = Field(1e-12, gt=0.0, lt=1.0)
    consecutive_below: int = Field(3, ge=1)

    def doubled(self) -> "TruncationPolicy":
        """Same tolerance with both caps doubled"""
        return self.model_copy(update={"q_max": 2 * self.q_max, "m_max": 2 * self.m_max})
