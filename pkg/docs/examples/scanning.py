"""
Searching for candidates
========================

A scan runs over every ascending reduced weight vector up to a bound,
fixes the degree by the Fano index, and keeps reports matching a filter.
The same search is available as ``weighted-links scan``.
"""

from weighted_links import ScanQuery, scan
from weighted_links.report import to_table

reports = scan(ScanQuery(max_weight=7, fano_indices={1}, filter_b2=8))
print(to_table(reports))

# Disabling the well-formedness filter surfaces the unclassified cases too.
everything = scan(ScanQuery(max_weight=4, fano_indices={1}, require_well_formed=False))
print(sum(not r.diffeo_type.classified for r in everything), "of", len(everything), "unclassified")
