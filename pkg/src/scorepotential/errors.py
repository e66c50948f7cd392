"""Structured errors; each class carries the CLI exit code it maps to."""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all domain errors raised by this package."""

    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.model_id: str | None = None

    def __str__(self) -> str:
        base = super().__str__()
        if self.model_id is not None:
            return f"model {self.model_id!r}: {base}"
        return base


class EmptySample(ToolkitError):
    """A sample with zero records cannot be ranked."""

    exit_code = 10

    def __init__(self):
        super().__init__("sample contains no records")


class NonFiniteScore(ToolkitError):
    exit_code = 11

    def __init__(self, record_id: str):
        super().__init__(f"record {record_id!r} has a non-finite score")
        self.record_id = record_id


class ZeroBaseRate(ToolkitError):
    exit_code = 12

    def __init__(self):
        super().__init__("base response rate is zero")


class NoResponders(ToolkitError):
    """Score potential and per-responder quantities are undefined without responders."""

    exit_code = 13

    def __init__(self):
        super().__init__("sample contains no responders")


class CutoffTooSmall(ToolkitError):
    exit_code = 14

    def __init__(self, fraction, sample_size: int):
        super().__init__(
            f"cut-off {fraction} selects zero of {sample_size} names"
        )
        self.fraction = fraction
        self.sample_size = sample_size


class DegenerateClasses(ToolkitError):
    exit_code = 15

    def __init__(self):
        super().__init__("AUC needs at least one responder and one non-responder")


class IndivisibleBuckets(ToolkitError):
    exit_code = 16

    def __init__(self, sample_size: int, bucket_count: int):
        super().__init__(
            f"bucket count {bucket_count} does not divide sample size {sample_size}"
        )
        self.sample_size = sample_size
        self.bucket_count = bucket_count


class EmptyBatch(ToolkitError):
    exit_code = 17

    def __init__(self):
        super().__init__("comparison needs at least one evaluation")


class TooFewPoints(ToolkitError):
    exit_code = 18

    def __init__(self, count: int):
        super().__init__(f"figure needs at least 2 series points, got {count}")
        self.count = count


class MalformedRow(ToolkitError):
    exit_code = 21

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class DuplicateId(ToolkitError):
    exit_code = 22

    def __init__(self, record_id: str):
        super().__init__(f"duplicate record id {record_id!r}")
        self.record_id = record_id


class BadResponseValue(ToolkitError):
    exit_code = 23

    def __init__(self, line_no: int):
        super().__init__(f"line {line_no}: response must be 0 or 1")
        self.line_no = line_no
