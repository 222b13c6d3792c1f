from .contact import contact_heuristic_action
from .enemies import EnemyMove, enemy_policy

__all__ = ["contact_heuristic_action", "EnemyMove", "enemy_policy"]
