"""Pure-Python route kernels over a compressed adjacency (indptr/indices/weights).

Only edges with weight > 0 are traversed.
"""


def hop_ball(indptr, indices, weights, src, max_hops):
    """Breadth-first hop distances from ``src``, up to ``max_hops``.

    Returns ``{node: hops}`` for every node other than ``src`` within reach.
    """
    dist = {src: 0}
    frontier = [src]
    for hops in range(1, max_hops + 1):
        nxt = []
        for u in frontier:
            for e in range(indptr[u], indptr[u + 1]):
                if weights[e] <= 0.0:
                    continue
                v = int(indices[e])
                if v not in dist:
                    dist[v] = hops
                    nxt.append(v)
        if not nxt:
            break
        frontier = nxt
    del dist[src]
    return dist


def best_routes(indptr, indices, weights, src, max_hops):
    """Most trusted route from ``src`` to every node within ``max_hops``.

    Hop-indexed dynamic programme over walks using exactly k edges; the
    product of weights never grows along a walk, so the optimum over all
    lengths is a simple path.  Ties go to fewer hops, then to the smaller
    node sequence.  Returns ``{node: (trust, path)}``.
    """
    layer = {src: (1.0, (src,))}
    best = {}
    for _ in range(max_hops):
        nxt = {}
        for u, (t_u, p_u) in layer.items():
            for e in range(indptr[u], indptr[u + 1]):
                w = float(weights[e])
                if w <= 0.0:
                    continue
                v = int(indices[e])
                t = t_u * w
                cur = nxt.get(v)
                if cur is None or t > cur[0] or (t == cur[0] and p_u < cur[1][:-1]):
                    nxt[v] = (t, p_u + (v,))
        for v, cand in nxt.items():
            if v == src:
                continue
            cur = best.get(v)
            if cur is None or cand[0] > cur[0]:
                best[v] = cand
        if not nxt:
            break
        layer = nxt
    return best
