"""Play-style laboratory: a deterministic turn-based tactics game, a
parameterized event-based reward function, a reward-conditioned policy
trained once and queryable for any coefficient vector, plus the evaluation
harness, CLI and HTTP explorer that go with it.
"""

__version__ = "0.1.0"
