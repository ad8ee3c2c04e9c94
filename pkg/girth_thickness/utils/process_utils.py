"""
Process resource snapshots for experiment logs.
"""

import logging
import os
from typing import Dict, Optional

import psutil

logger = logging.getLogger(__name__)


class ProcessMonitor:
    """Resource usage of the current search process"""

    def __init__(self, pid: Optional[int] = None):
        self.pid = pid or os.getpid()

    def snapshot(self) -> Dict[str, Optional[float]]:
        """Resident memory in MiB and consumed CPU seconds; None values when unavailable"""
        try:
            process = psutil.Process(self.pid)
            memory = process.memory_info()
            cpu = process.cpu_times()
            return {
                "rss_mb": round(memory.rss / (1024 * 1024), 2),
                "cpu_seconds": round(cpu.user + cpu.system, 3),
            }
        except (psutil.NoSuchProcess, psutil.AccessDenied) as e:
            logger.error(f"Error reading process info for PID {self.pid}: {e}")
            return {"rss_mb": None, "cpu_seconds": None}
