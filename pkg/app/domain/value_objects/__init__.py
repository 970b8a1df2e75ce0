"""Value objects du domain."""

