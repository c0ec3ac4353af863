"""Caching utilities using diskcache."""

import hashlib
import json
from typing import Any, Optional

from diskcache import Cache

from config import settings
from src.utils.logger import logger


class CacheManager:
    """Memoizes expensive pipeline results (ideal models, theta reports)."""

    def __init__(self, enabled: Optional[bool] = None):
        """Initialize cache manager."""
        self.enabled = settings.cache_enabled if enabled is None else enabled
        self.cache = Cache(str(settings.cache_dir))
        self.ttl_seconds = settings.cache_ttl_hours * 3600
        logger.debug(f"Cache initialized at {settings.cache_dir}")

    def _generate_key(self, namespace: str, payload: Any) -> str:
        """
        Generate cache key from a namespace and a JSON-serializable payload.

        Args:
            namespace: Computation identifier (e.g. "omega")
            payload: Inputs of the computation

        Returns:
            Cache key string
        """
        key_data = f"{namespace}:{json.dumps(payload, sort_keys=True)}"
        return hashlib.md5(key_data.encode()).hexdigest()

    def get(self, namespace: str, payload: Any) -> Optional[Any]:
        """
        Retrieve cached data.

        Returns:
            Cached data or None if not found/expired/disabled
        """
        if not self.enabled:
            return None
        key = self._generate_key(namespace, payload)
        data = self.cache.get(key)

        if data is not None:
            logger.debug(f"Cache HIT for {namespace}")
        else:
            logger.debug(f"Cache MISS for {namespace}")

        return data

    def set(self, namespace: str, payload: Any, data: Any) -> None:
        """Store data in cache."""
        if not self.enabled:
            return
        key = self._generate_key(namespace, payload)
        self.cache.set(key, data, expire=self.ttl_seconds)
        logger.debug(f"Cached {namespace} result, TTL={self.ttl_seconds}s")

    def clear(self) -> None:
        """Clear all cache."""
        self.cache.clear()
        logger.info("Cache cleared")
