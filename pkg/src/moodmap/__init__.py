"""moodmap: regional mood analytics over geotagged posts.

Classifies posts into seven emotion categories with a keyword-rank method,
rolls them up per region per day alongside epidemic case counts, and serves
the results over an HTTP API consumed by the map-and-charts portal.
"""

__version__ = "0.1.0"
