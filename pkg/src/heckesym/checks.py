from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """Outcome of a verification: truthy iff it passed; ``witness`` describes a failure."""

    ok: bool
    witness: dict = field(default=None)

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls, **info):
        return cls(True, info or None)

    @classmethod
    def failed(cls, **witness):
        return cls(False, witness)
