#!/usr/bin/env python3
"""Regenerate data/mnist/ from the `mnist` npm package (cazala/mnist).

That package ships 10,000 MNIST digits as JSON, grouped by class, with
pixels stored as round(p/255, 3). Rounding to 3 decimals is lossless for
8-bit pixels, so round(v*255) recovers the original bytes exactly.

Usage: npm pack mnist && tar xzf mnist-1.1.0.tgz
       python3 scripts/make_mnist_subset.py package/src/digits data/mnist
"""
import json
import os
import random
import struct
import sys


def main(digits_dir: str, out_dir: str) -> None:
    images = []
    for d in range(10):
        with open(os.path.join(digits_dir, f"{d}.json")) as f:
            flat = json.load(f)["data"]
        for i in range(len(flat) // 784):
            px = flat[i * 784 : (i + 1) * 784]
            images.append((d, bytes(min(255, max(0, round(v * 255))) for v in px)))

    rng = random.Random(20160419)
    rng.shuffle(images)
    train, test = images[:9000], images[9000:]

    os.makedirs(out_dir, exist_ok=True)
    for prefix, subset in (("train", train), ("t10k", test)):
        with open(os.path.join(out_dir, prefix + "-images-idx3-ubyte"), "wb") as f:
            f.write(struct.pack(">IIII", 2051, len(subset), 28, 28))
            for _, b in subset:
                f.write(b)
        with open(os.path.join(out_dir, prefix + "-labels-idx1-ubyte"), "wb") as f:
            f.write(struct.pack(">II", 2049, len(subset)))
            f.write(bytes(lbl for lbl, _ in subset))


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
