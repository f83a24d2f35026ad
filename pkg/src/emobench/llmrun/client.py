"""Chat-completion HTTP client with retries, exponential backoff and a
token-bucket rate limit."""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field

import httpx

from ..errors import ConfigError


@dataclass
class ChatConfig:
    endpoint: str
    model: str
    token: str = ""
    temperature: float = 0.0
    max_attempts: int = 3
    backoff_base: float = 0.5
    requests_per_minute: float = 0.0  # 0 disables rate limiting
    timeout: float = 60.0

    def __post_init__(self):
        if not self.endpoint:
            raise ConfigError("chat endpoint not configured")
        if self.max_attempts < 1:
            raise ConfigError("max_attempts must be >= 1")


class TokenBucket:
    """Steady-rate limiter; thread-safe."""

    def __init__(self, rate_per_minute: float, burst: int = 1):
        self.interval = 60.0 / rate_per_minute if rate_per_minute > 0 else 0.0
        self.capacity = max(1, burst)
        self.tokens = float(self.capacity)
        self.updated = time.monotonic()
        self._lock = threading.Lock()

    def acquire(self) -> None:
        if self.interval == 0:
            return
        while True:
            with self._lock:
                now = time.monotonic()
                self.tokens = min(
                    self.capacity, self.tokens + (now - self.updated) / self.interval
                )
                self.updated = now
                if self.tokens >= 1:
                    self.tokens -= 1
                    return
                wait = (1 - self.tokens) * self.interval
            time.sleep(wait)


@dataclass
class ChatReply:
    content: str
    tokens_in: int
    tokens_out: int


class ChatClient:
    def __init__(self, config: ChatConfig, sleep=time.sleep):
        self.config = config
        self._bucket = TokenBucket(config.requests_per_minute)
        self._sleep = sleep
        headers = {"Content-Type": "application/json"}
        if config.token:
            headers["Authorization"] = f"Bearer {config.token}"
        self._client = httpx.Client(headers=headers, timeout=config.timeout)

    def close(self) -> None:
        self._client.close()

    def complete(self, prompt: str) -> ChatReply:
        """One chat completion; retries transport failures with exponential
        backoff and raises the last error when attempts run out."""
        last_exc: Exception | None = None
        for attempt in range(self.config.max_attempts):
            if attempt:
                self._sleep(self.config.backoff_base * 2 ** (attempt - 1))
            self._bucket.acquire()
            try:
                resp = self._client.post(
                    self.config.endpoint,
                    json={
                        "model": self.config.model,
                        "messages": [{"role": "user", "content": prompt}],
                        "temperature": self.config.temperature,
                    },
                )
                resp.raise_for_status()
                body = resp.json()
                content = body["choices"][0]["message"]["content"]
                usage = body.get("usage", {})
                return ChatReply(
                    content=content,
                    tokens_in=int(usage.get("prompt_tokens", 0)),
                    tokens_out=int(usage.get("completion_tokens", 0)),
                )
            except (httpx.HTTPError, KeyError, IndexError, ValueError) as exc:
                last_exc = exc
        raise last_exc  # type: ignore[misc]
