"""Keyframe-summary evaluation against ground-truth user summaries.

Frames are compared with 256-bin HSV color histograms and 192-value
level-3 Haar-wavelet texture descriptors under the Bhattacharyya
coefficient; summaries are scored with precision/recall/F-measure.
"""

from vseval._core import (
    EvalError,
    __version__,
    bhattacharyya,
    color_histogram,
    evaluate_manifest,
    haar_approx,
    make_fixture,
    match_summaries,
    pair_scores,
    quantize_hsv,
    rgb_to_hsv,
    texture_descriptor,
)

__all__ = [
    "EvalError",
    "__version__",
    "bhattacharyya",
    "color_histogram",
    "evaluate_manifest",
    "haar_approx",
    "make_fixture",
    "match_summaries",
    "pair_scores",
    "quantize_hsv",
    "rgb_to_hsv",
    "texture_descriptor",
]
