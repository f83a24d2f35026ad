from .parse import Rejected, parse_score
from .client import ChatClient, ChatConfig, ChatReply, TokenBucket
from .cost import estimate_cost
from .runner import LlmOutcome, run_annotation, load_outcomes, export_outcomes, build_manifest
from .stub import StubChatServer, REFUSAL_TEXT

__all__ = [
    "Rejected",
    "parse_score",
    "ChatClient",
    "ChatConfig",
    "ChatReply",
    "TokenBucket",
    "estimate_cost",
    "LlmOutcome",
    "run_annotation",
    "load_outcomes",
    "export_outcomes",
    "build_manifest",
    "StubChatServer",
    "REFUSAL_TEXT",
]
