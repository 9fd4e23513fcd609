from .constants import MASK64, SPLITMIX_GAMMA, SPLITMIX_MUL1, SPLITMIX_MUL2


class BlockGrid:

    def __init__(self, extent, block_size):
        """
        BlockGrid walks a dimension of length `extent` in tiles of
        `block_size`; the last tile is ragged when block_size does not
        divide extent.

        :param int extent: length of the dimension being tiled
        :param int block_size: nominal tile length
        """
        self.extent = extent
        self.block_size = block_size

    @property
    def total_blocks(self):
        return -(-self.extent // self.block_size)

    def block(self, index):
        """(start, stop) of tile `index`"""
        start = index * self.block_size
        return start, min(start + self.block_size, self.extent)

    def __iter__(self):
        for index in range(self.total_blocks):
            yield self.block(index)

    def __len__(self):
        return self.total_blocks


def split_ranges(extent, parts):
    """Split range(extent) into at most `parts` contiguous, nearly equal ranges"""
    parts = max(1, min(parts, extent))
    base, extra = divmod(extent, parts)
    ranges = []
    start = 0
    for p in range(parts):
        stop = start + base + (1 if p < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


class SplitMix64:
    """
    64-bit SplitMix generator. `uniform_pm1` maps the top 53 bits of each
    output to a double in [-1, 1).
    """

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + SPLITMIX_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * SPLITMIX_MUL1) & MASK64
        z = ((z ^ (z >> 27)) * SPLITMIX_MUL2) & MASK64
        return z ^ (z >> 31)

    def uniform_pm1(self):
        return (self.next_u64() >> 11) * 2.0 ** -52 - 1.0
