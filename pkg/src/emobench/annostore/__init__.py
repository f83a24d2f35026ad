from .plan import AssignmentPlan, build_plan
from .store import RatingStore, validate_labels, read_ratings_export
from .service import create_app

__all__ = [
    "AssignmentPlan",
    "build_plan",
    "RatingStore",
    "validate_labels",
    "read_ratings_export",
    "create_app",
]
