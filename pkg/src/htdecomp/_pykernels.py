"""Pure-Python set kernels over int bitmasks.

Reference backend; always available. Same contract as the compiled
``_ckernels.EdgeTable``.
"""


class EdgeTable:
    backend = "python"

    __slots__ = ("masks",)

    def __init__(self, edge_masks, vertex_count):
        self.masks = tuple(edge_masks)

    def vertex_union(self, es):
        masks = self.masks
        out = 0
        while es:
            low = es & -es
            out |= masks[low.bit_length() - 1]
            es ^= low
        return out

    def bound_edges(self, conn):
        out = 0
        if conn:
            for i, m in enumerate(self.masks):
                if m & conn:
                    out |= 1 << i
        return out

    def separate(self, edges, separator):
        masks = self.masks
        sep_vertices = self.vertex_union(separator)
        rest = edges & ~separator
        covered = 0
        # (edge bit, vertices outside the separator) in ascending edge order
        loose = []
        while rest:
            low = rest & -rest
            rest ^= low
            outside = masks[low.bit_length() - 1] & ~sep_vertices
            if outside:
                loose.append((low, outside))
            else:
                covered |= low
        components = []
        while loose:
            comp, frontier = loose[0]
            remaining = loose[1:]
            grew = True
            while grew and remaining:
                grew = False
                keep = []
                for bit, outside in remaining:
                    if outside & frontier:
                        comp |= bit
                        frontier |= outside
                        grew = True
                    else:
                        keep.append((bit, outside))
                remaining = keep
            components.append(comp)
            loose = remaining
        return components, covered
