from .comparison import SizeComparisonGraph, SystemHeatmap

__all__ = ["SizeComparisonGraph", "SystemHeatmap"]
