"""Smoke tests for the python bindings."""

import json
import math

import numpy as np
import pytest

import vseval


def solid(r, g, b, side=16):
    img = np.zeros((side, side, 3), dtype=np.uint8)
    img[:, :] = (r, g, b)
    return img


def write_ppm(path, img):
    h, w, _ = img.shape
    with open(path, "wb") as fh:
        fh.write(f"P6\n{w} {h}\n255\n".encode())
        fh.write(img.tobytes())


def test_version():
    assert vseval.__version__ == "0.1.0"


def test_quantize_hsv():
    assert vseval.quantize_hsv(0.0, 0.0, 0.0) == 0
    assert vseval.quantize_hsv(180.0, 0.5, 0.9) == 133
    assert vseval.quantize_hsv(359.999, 1.0, 1.0) == 255
    with pytest.raises(vseval.EvalError):
        vseval.quantize_hsv(360.0, 0.5, 0.5)


def test_rgb_to_hsv():
    hsv = vseval.rgb_to_hsv(solid(255, 0, 0, side=2))
    assert hsv.shape == (2, 2, 3)
    assert hsv[0, 0, 0] == 0.0
    assert hsv[0, 0, 1] == 1.0
    assert hsv[0, 0, 2] == 1.0
    cyan = vseval.rgb_to_hsv(solid(0, 255, 255, side=1))
    assert math.isclose(cyan[0, 0, 0], 180.0)


def test_color_histogram():
    hist = vseval.color_histogram(solid(255, 0, 0))
    assert hist.shape == (256,)
    assert hist[7] == 1.0
    assert hist.sum() == pytest.approx(1.0)


def test_texture_descriptor_gray_frame():
    desc = vseval.texture_descriptor(solid(128, 128, 128, side=64))
    assert desc.shape == (192,)
    assert np.all(desc[:128] == 0.0)
    assert np.allclose(desc[128:], 1.0 / 64.0, atol=1e-12)


def test_haar_approx_matches_block_means():
    rng = np.random.RandomState(5)
    grid = rng.rand(64, 64)
    approx = vseval.haar_approx(grid, levels=3)
    oracle = grid.reshape(8, 8, 8, 8).mean(axis=(1, 3))
    assert np.allclose(approx, oracle, atol=1e-12)


def test_bhattacharyya():
    assert vseval.bhattacharyya(np.array([0.25] * 4), np.array([0.25] * 4)) == 1.0
    score = vseval.bhattacharyya(np.array([0.5, 0.5]), np.array([0.9, 0.1]))
    assert score == pytest.approx(math.sqrt(0.45) + math.sqrt(0.05), abs=1e-12)
    with pytest.raises(vseval.EvalError):
        vseval.bhattacharyya(np.array([0.7, 0.6]), np.array([0.5, 0.5]))


def test_match_and_scores():
    frames = [(1, solid(255, 0, 0)), (2, solid(0, 255, 0))]
    outcome = vseval.match_summaries(frames, frames)
    assert outcome["n_matched"] == 2
    assert outcome["pairs"][0][:2] == (1, 1)

    precision, recall, f = vseval.pair_scores(6, 8, 7)
    assert precision == 0.75
    assert recall == pytest.approx(6 / 7)
    assert f == pytest.approx(0.8)


def test_evaluate_manifest_roundtrip(tmp_path):
    frames = tmp_path / "frames"
    frames.mkdir()
    write_ppm(frames / "frame1.ppm", solid(200, 40, 40))
    write_ppm(frames / "frame2.ppm", solid(40, 200, 40))
    manifest = tmp_path / "manifest.json"
    manifest.write_text(json.dumps({
        "videos": [{
            "id": "v1",
            "automatic": [{"label": "auto", "dir": "frames"}],
            "user": [{"label": "user", "dir": "frames"}],
        }]
    }))

    report = vseval.evaluate_manifest(manifest)
    assert report["overall_mean_f"] == 1.0
    assert report["per_video_mean_f"]["v1"] == 1.0
    assert report["pairs"][0]["n_matched"] == 2
    assert report["config"]["match_mode"] == "color_and_texture"


def test_fixture_modes(tmp_path):
    manifest = vseval.make_fixture("shuffle_collision", tmp_path / "fx")
    strict = vseval.evaluate_manifest(manifest)
    relaxed = vseval.evaluate_manifest(manifest, match_mode="color_only")
    assert strict["overall_mean_f"] == 0.0
    assert relaxed["overall_mean_f"] == 1.0
