"""Walkthrough: from raw landmarks to a part-aware (PAS) image.

Builds a landmark set by hand, renders the Gaussian response field, thresholds
it into a binary mask, and multiplies the mask into a body crop. Artifacts are
written to demos/out/pas/ so you can eyeball each stage.
"""

from pathlib import Path

import cv2
import numpy as np

from peri.landmarks import (Landmark, LandmarkSet, load_landmark_file,
                            save_landmark_file, to_pixel_coords)
from peri.pasgen import binarize, compose_pas, gaussian_field, make_pas, resize_crop

OUT = Path(__file__).parent / "out" / "pas"
OUT.mkdir(parents=True, exist_ok=True)


def save_gray(name: str, values: np.ndarray) -> None:
    img = (np.clip(values / max(values.max(), 1e-9), 0, 1) * 255).astype(np.uint8)
    cv2.imwrite(str(OUT / name), img)


def save_rgb(name: str, chw: np.ndarray) -> None:
    hwc = (np.clip(chw, 0, 1) * 255).astype(np.uint8).transpose(1, 2, 0)
    cv2.imwrite(str(OUT / name), cv2.cvtColor(hwc, cv2.COLOR_RGB2BGR))


# --- 1. a hand-made "person": a stick figure's worth of keypoints -----------
# Coordinates are normalized to the crop ([0,1] x [0,1]); a few points are
# marked absent, as a real detector would do for occluded joints.
torso = [(0.5, 0.25), (0.5, 0.4), (0.5, 0.55), (0.35, 0.4), (0.65, 0.4)]
arms = [(0.2, 0.55), (0.8, 0.55)]
legs = [(0.4, 0.8), (0.6, 0.8)]
body = [Landmark(x, y) for x, y in torso + arms + legs]
body.append(Landmark(0.0, 0.0, present=False))  # an occluded point
face = [Landmark(0.5 + dx, 0.18 + dy) for dx, dy in
        [(-0.04, -0.02), (0.04, -0.02), (0.0, 0.02), (0.0, 0.05)]]
ls = LandmarkSet(body=body, face=face, crop_width=160, crop_height=160,
                 layout=f"demo-{len(body)}-{len(face)}")
print(f"landmarks: {ls.num_present()} present of {len(ls.all_landmarks)}")

# The JSON file format round-trips losslessly:
save_landmark_file(ls, OUT / "person.landmarks.json")
assert load_landmark_file(OUT / "person.landmarks.json").num_present() == ls.num_present()

# --- 2. response field and binary mask at a chosen render size --------------
size = 128
points = to_pixel_coords(ls, size, size)
field = gaussian_field(points, size, size, sigma=3.0)
print(f"field peak {field.values.max():.4f} (closed form 1/(3*sqrt(2*pi)) = "
      f"{1 / (3 * np.sqrt(2 * np.pi)):.4f})")
save_gray("field.png", field.values)

mask = binarize(points, size, size, rho=4.0)
print(f"mask keeps {mask.mask.mean():.1%} of pixels at rho=4")
save_gray("mask.png", mask.mask.astype(np.float64))

# --- 3. compose with a synthetic crop ----------------------------------------
yy, xx = np.mgrid[0:160, 0:160]
crop = np.stack([((xx * 1.3 + yy) % 256), (yy * 1.5) % 256, (xx * 0.9) % 256],
                axis=-1).astype(np.uint8)
save_rgb("crop.png", resize_crop(crop, size))

pas = compose_pas(resize_crop(crop, size), mask, source_id="demo")
save_rgb("pas.png", pas.pixels)
print(f"PAS keeps the crop pixels only inside the mask; "
      f"{(pas.pixels != 0).mean():.1%} of values are nonzero")

# make_pas bundles resize + projection + mask + product in one call:
one_call = make_pas(crop, ls, sigma=3.0, rho=4.0, out_size=size)
assert np.array_equal(one_call.pixels, pas.pixels)
print(f"wrote field/mask/crop/PAS images to {OUT}")
