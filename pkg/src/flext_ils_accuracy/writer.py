"""Report writers for flext-ils-accuracy.

Rows are buffered and emitted on close as UTF-8 CSV with LF line endings;
documents (JSON, DOT, text) are written whole.

Copyright (c) 2025 Flext. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import TYPE_CHECKING, Self

import pandas as pd
from pydantic import BaseModel

from flext_ils_accuracy import c, e, p, r, t, u

if TYPE_CHECKING:
    import types

logger = u.fetch_logger(__name__)

_WRITER_SAFE_EXCEPTIONS: tuple[type[Exception], ...] = (
    OSError,
    ValueError,
    TypeError,
    KeyError,
)


class FlextIlsAccuracyReportWriter:
    """Buffered CSV report writer with a fixed column order."""

    def __init__(self, output_file: Path | str, columns: Sequence[str]) -> None:
        """Initialize the writer for one report file."""
        self.output_file = Path(output_file)
        self.columns = tuple(columns)
        self._rows: list[dict[str, str | int | float]] = []
        self._opened = False

    def __enter__(self) -> Self:
        """Context manager entry."""
        self.open()
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: types.TracebackType | None,
    ) -> None:
        """Context manager exit."""
        self.close()

    @property
    def record_count(self) -> int:
        """The number of rows buffered."""
        return len(self._rows)

    def open(self) -> p.Result[bool]:
        """Create the report's directory."""
        try:
            self.output_file.parent.mkdir(parents=True, exist_ok=True)
        except _WRITER_SAFE_EXCEPTIONS as exc:
            return e.fail_operation("open report file", exc, result_type=r[bool])
        self._opened = True
        return r[bool].ok(value=True)

    def write_record(self, record: Mapping[str, str | int | float]) -> p.Result[bool]:
        """Buffer one row; every column must be present."""
        missing = [name for name in self.columns if name not in record]
        if missing:
            return r[bool].fail(
                f"row for {self.output_file.name} lacks column(s) {', '.join(missing)}"
            )
        if not self._opened:
            opened = self.open()
            if not opened.success:
                return opened
        self._rows.append({name: record[name] for name in self.columns})
        return r[bool].ok(value=True)

    def close(self) -> p.Result[bool]:
        """Write buffered rows, header first."""
        try:
            self.output_file.parent.mkdir(parents=True, exist_ok=True)
            frame = pd.DataFrame(self._rows, columns=list(self.columns))
            frame.to_csv(
                self.output_file,
                index=False,
                encoding=c.IlsAccuracy.ENCODING,
                lineterminator=c.IlsAccuracy.LINE_TERMINATOR,
            )
        except _WRITER_SAFE_EXCEPTIONS as exc:
            return e.fail_operation("close report file", exc, result_type=r[bool])
        logger.debug("Report written", path=str(self.output_file), rows=len(self._rows))
        return r[bool].ok(value=True)

    @staticmethod
    def write_rows(
        output_file: Path | str,
        columns: Sequence[str],
        rows: Sequence[Mapping[str, str | int | float]],
    ) -> p.Result[bool]:
        """Write a whole CSV report in one call."""
        sink: p.IlsAccuracy.ReportSink = FlextIlsAccuracyReportWriter(output_file, columns)
        for row in rows:
            written = sink.write_record(row)
            if not written.success:
                return written
        return sink.close()

    @staticmethod
    def write_columns(
        output_file: Path | str, columns: Mapping[str, t.IlsAccuracy.FloatArray]
    ) -> p.Result[bool]:
        """Write equally long numeric columns as a CSV, e.g. a trajectory."""
        path = Path(output_file)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            pd.DataFrame(dict(columns)).to_csv(
                path,
                index=False,
                encoding=c.IlsAccuracy.ENCODING,
                lineterminator=c.IlsAccuracy.LINE_TERMINATOR,
            )
        except _WRITER_SAFE_EXCEPTIONS as exc:
            return e.fail_operation("write columns", exc, result_type=r[bool])
        return r[bool].ok(value=True)

    @staticmethod
    def write_document(output_file: Path | str, text: str) -> p.Result[bool]:
        """Write a text document with LF line endings."""
        path = Path(output_file)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with path.open(
                "w", encoding=c.IlsAccuracy.ENCODING, newline=c.IlsAccuracy.LINE_TERMINATOR
            ) as handle:
                handle.write(text)
        except _WRITER_SAFE_EXCEPTIONS as exc:
            return e.fail_operation("write document", exc, result_type=r[bool])
        logger.debug("Document written", path=str(path), size=len(text))
        return r[bool].ok(value=True)

    @staticmethod
    def write_model(
        output_file: Path | str, model: BaseModel, *, by_alias: bool = False
    ) -> p.Result[bool]:
        """Write a model as indented JSON."""
        return FlextIlsAccuracyReportWriter.write_document(
            output_file, model.model_dump_json(indent=2, by_alias=by_alias) + "\n"
        )


__all__: list[str] = ["FlextIlsAccuracyReportWriter"]
