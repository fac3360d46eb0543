"""Certificate value returned by every validator in the engine."""
from dataclasses import dataclass, field


@dataclass
class Certificate:
    """Outcome of a check: a verdict, a short reason and an optional witness.

    Validators report property violations through a failed certificate
    instead of raising, so callers can print the counterexample.
    """

    ok: bool
    reason: str = ""
    witness: object = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    @classmethod
    def success(cls, reason="", witness=None, **details):
        return cls(ok=True, reason=reason, witness=witness, details=details)

    @classmethod
    def failure(cls, reason, witness=None, **details):
        return cls(ok=False, reason=reason, witness=witness, details=details)

    def to_dict(self):
        result = {"ok": self.ok, "reason": self.reason}
        if self.witness is not None:
            result["witness"] = self.witness
        if self.details:
            result["details"] = dict(self.details)
        return result
