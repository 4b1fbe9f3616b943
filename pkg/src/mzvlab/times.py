"""
Wall-clock timing for verification reports.

Classes:
    TimerLabel: renders a duration in the largest unit that keeps it readable.
    Timer: perf_counter based stopwatch that keeps every reading it takes.
"""

from dataclasses import dataclass, field
from math import floor
from time import perf_counter


@dataclass(frozen=True)
class TimerLabel:
    """A timer label class for labeling timer records."""

    seconds: float
    roundto: int = field(default=3, repr=False)
    minunit: float = field(default=0.1, repr=False)

    @staticmethod
    def _get_label_dict(seconds: float, minunit: float) -> dict[str, float]:
        """calculate the label dict"""
        label_dict = {}
        minutes, seconds = divmod(seconds, 60)
        if (min_ := floor(minutes)) > 0:
            label_dict["min"] = min_
        if seconds > minunit:
            label_dict["sec"] = seconds
        elif (mili := seconds * 1e3) > minunit:
            label_dict["ms"] = mili
        elif (micro := seconds * 1e6) > minunit:
            label_dict["μs"] = micro
        else:
            label_dict["ns"] = seconds * 1e9
        return label_dict

    def __str__(self) -> str:
        label_dict = TimerLabel._get_label_dict(self.seconds, self.minunit)
        return " ".join(
            f"{round(val, self.roundto)} {key}" for key, val in label_dict.items()
        )


@dataclass(slots=True)
class Timer:
    """A timer class for measuring execution time."""

    start: float = field(default_factory=perf_counter, repr=False)
    record: list[float] = field(default_factory=list, repr=False)

    def __post_init__(self) -> None:
        self.record.append(self.start)

    def log_perf_counter(self) -> float:
        """records the current time and returns it"""
        now = perf_counter()
        self.record.append(now)
        return now

    @property
    def elapsed(self) -> float:
        """seconds between start and the latest reading"""
        return self.record[-1] - self.start

    @property
    def soft_elapsed_from_start(self) -> float:
        """seconds since start, without recording"""
        return perf_counter() - self.start

    @property
    def label(self) -> TimerLabel:
        return TimerLabel(self.elapsed)

    def __enter__(self) -> "Timer":
        return self

    def __exit__(self, *args) -> None:
        self.log_perf_counter()
