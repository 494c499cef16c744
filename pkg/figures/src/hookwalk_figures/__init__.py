"""Figure scripts over hookwalk CSV exports (schema-level coupling only)."""

from .render import (
    BLUE,
    OVERLAY_LABEL,
    RED,
    ZERO_LINE_LABEL,
    FigureSpec,
    quarter_circle_overlay,
    render_frequency,
    render_snapshots,
    render_trajectories,
    save_figure,
)
from .schema import (
    FrequencyTable,
    SchemaError,
    SnapshotData,
    TrajectoryData,
    read_frequency,
    read_snapshot,
    read_trajectories,
)

__all__ = [
    "BLUE",
    "OVERLAY_LABEL",
    "RED",
    "ZERO_LINE_LABEL",
    "FigureSpec",
    "FrequencyTable",
    "SchemaError",
    "SnapshotData",
    "TrajectoryData",
    "quarter_circle_overlay",
    "read_frequency",
    "read_snapshot",
    "read_trajectories",
    "render_frequency",
    "render_snapshots",
    "render_trajectories",
    "save_figure",
]
