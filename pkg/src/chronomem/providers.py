"""Chat-completion and embedding backends.

Two implementations of one small interface: ``RemoteProvider`` speaks the
usual chat-completions JSON wire format over HTTP, and ``ScriptedProvider``
is a deterministic in-process double so every test and offline benchmark run
works without a network. Endpoint, key, and model names come from the
environment (RECALL_API_BASE / RECALL_API_KEY / RECALL_MODEL), never from
code.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

import requests

__all__ = [
    "ChatRequest",
    "ChatProvider",
    "ProviderError",
    "RemoteProvider",
    "ScriptedProvider",
    "provider_from_env",
]

ENV_BASE = "RECALL_API_BASE"
ENV_KEY = "RECALL_API_KEY"
ENV_MODEL = "RECALL_MODEL"


class ProviderError(RuntimeError):
    """A provider call failed and should not be retried by the caller."""


@dataclass
class ChatRequest:
    messages: list[tuple[str, str]]  # ordered (role, content) pairs
    system: str = ""
    temperature: float = 0.0
    max_tokens: int | None = None

    def __post_init__(self):
        if not self.messages:
            raise ValueError("a chat request needs at least one message")

    def flattened(self) -> str:
        """All content in one string, for matching and logging."""
        parts = [self.system] if self.system else []
        parts.extend(content for _, content in self.messages)
        return "\n".join(parts)


class ChatProvider:
    def complete(self, request: ChatRequest) -> str:
        raise NotImplementedError


class RemoteProvider(ChatProvider):
    """HTTP client for a chat-completions-compatible endpoint.

    Retries 5xx responses and timeouts with exponential backoff (3 attempts);
    4xx responses raise immediately with a body excerpt. Requests carry no
    server-side state, so retries are safe.
    """

    def __init__(
        self,
        base_url: str,
        api_key: str = "",
        model: str = "",
        timeout: float = 30.0,
        max_attempts: int = 3,
        backoff: float = 0.5,
    ):
        self.base_url = base_url.rstrip("/")
        self.api_key = api_key
        self.model = model
        self.timeout = timeout
        self.max_attempts = max_attempts
        self.backoff = backoff

    def _headers(self) -> dict[str, str]:
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        return headers

    def _post(self, path: str, body: dict) -> dict:
        url = f"{self.base_url}{path}"
        last_error: Exception | None = None
        for attempt in range(self.max_attempts):
            if attempt:
                time.sleep(self.backoff * 2 ** (attempt - 1))
            try:
                response = requests.post(
                    url, json=body, headers=self._headers(), timeout=self.timeout
                )
            except requests.RequestException as exc:
                last_error = exc
                continue
            if response.status_code >= 500:
                last_error = ProviderError(
                    f"server error {response.status_code}: {response.text[:200]}"
                )
                continue
            if response.status_code >= 400:
                raise ProviderError(
                    f"request rejected ({response.status_code}): {response.text[:200]}"
                )
            return response.json()
        raise ProviderError(f"gave up after {self.max_attempts} attempts: {last_error}")

    def complete(self, request: ChatRequest) -> str:
        messages = []
        if request.system:
            messages.append({"role": "system", "content": request.system})
        messages.extend(
            {"role": role, "content": content} for role, content in request.messages
        )
        body: dict = {
            "model": self.model,
            "messages": messages,
            "temperature": request.temperature,
        }
        if request.max_tokens is not None:
            body["max_tokens"] = request.max_tokens
        data = self._post("/chat/completions", body)
        try:
            return data["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as exc:
            raise ProviderError(f"unexpected completion payload: {data!r:.200}") from exc

    def embed(self, text: str) -> list[float]:
        if not text:
            raise ProviderError("cannot embed empty text")
        data = self._post("/embeddings", {"model": self.model, "input": text})
        try:
            return list(data["data"][0]["embedding"])
        except (KeyError, IndexError, TypeError) as exc:
            raise ProviderError(f"unexpected embedding payload: {data!r:.200}") from exc


@dataclass
class ScriptedProvider(ChatProvider):
    """Deterministic provider double: first matching substring wins.

    ``script`` is an ordered list of (matcher, response) pairs; a matcher is a
    plain substring tested against the flattened request. Records every
    request it sees so tests can assert on call counts.
    """

    script: list[tuple[str, str]] = field(default_factory=list)
    default: str = "I do not have enough information to answer the question."
    calls: list[ChatRequest] = field(default_factory=list)

    @property
    def call_count(self) -> int:
        return len(self.calls)

    def complete(self, request: ChatRequest) -> str:
        self.calls.append(request)
        content = request.flattened()
        for matcher, response in self.script:
            if matcher in content:
                return response
        return self.default


def provider_from_env() -> RemoteProvider | None:
    """Build a remote provider from the environment, or None if unconfigured."""
    base = os.environ.get(ENV_BASE)
    if not base:
        return None
    return RemoteProvider(
        base_url=base,
        api_key=os.environ.get(ENV_KEY, ""),
        model=os.environ.get(ENV_MODEL, ""),
    )
