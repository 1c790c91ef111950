# slpseq package
#
# Subsequence recognition and longest-common-subsequence queries on texts given
# as straight-line programs, answered without decompressing the text.  The
# algorithms live under ``slpseq.core``; command implementations live under
# ``slpseq.commands``.
#
# Entry point: ``slpseq.cli:cli``

__all__ = ["__version__"]

__version__ = "0.1.0"
