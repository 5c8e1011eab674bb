"""Integer codes and constants shared by the kernel backends."""

LEAF_EXACT = 0
LEAF_MITCHELL = 1
LEAF_EFMLM = 2

#: cfg.model -> KOM leaf code (flat "mitchell" is not KOM-composable).
MODEL_LEAF = {"exact": LEAF_EXACT, "mitchell-kom": LEAF_MITCHELL, "refmlm": LEAF_EFMLM}

#: Largest operand width the vectorized kernels accept; wider configurations
#: fall back to the scalar path (int64 intermediates would overflow).
MAX_KERNEL_WIDTH = 16

MASK64 = (1 << 64) - 1
XORSHIFT_MULT = 2685821657736338717
