"""Services métier du domain."""

