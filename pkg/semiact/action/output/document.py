"""Renders reports as JSON documents.

SPDX-License-Identifier: BSD-3-Clause
"""

import pydantic


def render(report: pydantic.BaseModel) -> str:
    """Returns the report as JSON, omitting absent optional fields."""
    return report.model_dump_json(indent=2, exclude_none=True)
