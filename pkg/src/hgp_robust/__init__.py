"""Hypergraph product codes and the robustness of their effective distance."""
