"""Deterministic chat-completion stub server for offline tests and the
end-to-end smoke run.

Reply policy: a fixed reply if configured, otherwise a deterministic
pseudo-score derived from the prompt hash; prompts matching a refusal
pattern get refusal text instead.
"""

from __future__ import annotations

import hashlib
import json
import re
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

REFUSAL_TEXT = "Nie mogę ocenić emocjonalności tego tekstu."


def deterministic_score(prompt: str) -> int:
    digest = hashlib.sha256(prompt.encode("utf-8")).digest()
    return 1 + digest[0] % 5


class StubChatServer:
    """Local HTTP server speaking the chat-completion wire shape."""

    def __init__(
        self,
        host: str = "127.0.0.1",
        port: int = 0,
        fixed_reply: str | None = None,
        refuse_pattern: str | None = None,
    ):
        self.fixed_reply = fixed_reply
        self.refuse_re = re.compile(refuse_pattern) if refuse_pattern else None
        self.requests: list[str] = []  # prompts received, in arrival order
        stub = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                length = int(self.headers.get("Content-Length", 0))
                body = json.loads(self.rfile.read(length))
                prompt = body["messages"][0]["content"]
                stub.requests.append(prompt)
                if stub.refuse_re and stub.refuse_re.search(prompt):
                    content = REFUSAL_TEXT
                elif stub.fixed_reply is not None:
                    content = stub.fixed_reply
                else:
                    content = str(deterministic_score(prompt))
                reply = {
                    "choices": [{"message": {"role": "assistant", "content": content}}],
                    "usage": {
                        "prompt_tokens": len(prompt.split()),
                        "completion_tokens": len(content.split()),
                    },
                    "model": body.get("model", "stub"),
                }
                data = json.dumps(reply).encode("utf-8")
                self.send_response(200)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(data)))
                self.end_headers()
                self.wfile.write(data)

            def log_message(self, *args):
                pass

        self._server = ThreadingHTTPServer((host, port), Handler)
        self._thread = threading.Thread(target=self._server.serve_forever, daemon=True)

    @property
    def endpoint(self) -> str:
        host, port = self._server.server_address[:2]
        return f"http://{host}:{port}/v1/chat/completions"

    def start(self) -> "StubChatServer":
        self._thread.start()
        return self

    def stop(self) -> None:
        self._server.shutdown()
        self._server.server_close()

    def __enter__(self) -> "StubChatServer":
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()


def main() -> None:
    import argparse

    parser = argparse.ArgumentParser(description="deterministic chat stub server")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8800)
    parser.add_argument("--fixed-reply")
    parser.add_argument("--refuse-pattern")
    args = parser.parse_args()
    server = StubChatServer(args.host, args.port, args.fixed_reply, args.refuse_pattern)
    print(f"stub chat server on {server.endpoint}")
    server.start()
    server._thread.join()


if __name__ == "__main__":
    main()
