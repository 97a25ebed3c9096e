"""Pure-Python enumeration kernel (fallback for the compiled ``_kernels``)."""


class CapExceeded(RuntimeError):
    """Raised when an enumeration would visit more extensions than allowed."""


def extension_stats(n, pred_masks, labels, cap):
    """Histogram inv and maj over all linear extensions.

    ``pred_masks[t]`` is the bitmask of elements strictly below ``t`` and
    ``labels[t]`` its label in 1..n.  Returns ``(count, inv_hist, maj_hist)``
    with histograms of length n*(n-1)//2 + 1.
    """
    size = n * (n - 1) // 2 + 1
    inv_hist = [0] * size
    maj_hist = [0] * size
    if n == 0:
        inv_hist[0] = maj_hist[0] = 1
        return 1, inv_hist, maj_hist
    full = (1 << n) - 1
    count = 0

    # per depth: placed mask, label mask, inv, maj, last label, next candidate
    placed = [0] * (n + 1)
    lab_mask = [0] * (n + 1)
    inv_acc = [0] * (n + 1)
    maj_acc = [0] * (n + 1)
    last = [0] * (n + 1)
    cand = [0] * (n + 1)
    depth = 0
    while depth >= 0:
        if placed[depth] == full:
            count += 1
            if count > cap:
                raise CapExceeded(f"more than {cap} linear extensions")
            inv_hist[inv_acc[depth]] += 1
            maj_hist[maj_acc[depth]] += 1
            depth -= 1
            continue
        t = cand[depth]
        pm = placed[depth]
        while t < n and ((pm >> t) & 1 or (pred_masks[t] & pm) != pred_masks[t]):
            t += 1
        if t == n:
            depth -= 1
            continue
        cand[depth] = t + 1
        a = labels[t]
        d1 = depth + 1
        placed[d1] = pm | (1 << t)
        lab_mask[d1] = lab_mask[depth] | (1 << a)
        inv_acc[d1] = inv_acc[depth] + bin(lab_mask[depth] >> a).count("1")
        maj_acc[d1] = maj_acc[depth] + (depth if depth and last[depth] > a else 0)
        last[d1] = a
        cand[d1] = 0
        depth = d1
    return count, inv_hist, maj_hist
