# cython: language_level=3
"""Compiled scanners for tree text and pointer expressions.

Drop-in replacements for _sexpr.parse_node and the _pointers scanner,
selected at import time by _backend. Semantics and error types match the
pure versions exactly; only the character scanning runs in C.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy

from cpython.unicode cimport PyUnicode_DecodeUTF8

from srlkit._nodes import Internal, Preterminal
from srlkit.errors import (
    EmptyFragment,
    EmptyInput,
    MalformedPointer,
    TrailingGarbage,
    UnbalancedParens,
)


cdef inline bint _is_ws(unsigned char c) noexcept:
    return c == 32 or c == 9 or c == 10 or c == 13 or c == 11 or c == 12


cdef object _finish(list entry, bint has_parent):
    label = entry[0]
    children = <list>entry[1]
    token = entry[2]
    if token is not None:
        return Preterminal(label, token)
    if not children:
        raise UnbalancedParens("node (%s) has no children or token" % (label or ""))
    if label is None or label == "":
        if has_parent:
            raise UnbalancedParens("empty node label below the root")
        if len(children) != 1:
            raise UnbalancedParens(
                "outer wrapper must have exactly one child, got %d" % len(children)
            )
        return children[0]
    return Internal(label, tuple(children))


def parse_node(str text):
    """Parse one tree, unwrapping a single empty-labeled outer wrapper."""
    cdef bytes data = text.encode("utf-8")
    cdef const unsigned char* s = data
    cdef Py_ssize_t n = len(data)
    cdef Py_ssize_t i = 0, start
    cdef unsigned char c
    cdef list stack = []
    cdef list top
    root = None
    while i < n:
        c = s[i]
        if _is_ws(c):
            i += 1
            continue
        if c == 40:  # '('
            if root is not None:
                raise TrailingGarbage("content after the root tree")
            if stack:
                top = <list>stack[-1]
                if top[0] is None:
                    top[0] = ""
                if top[2] is not None:
                    raise UnbalancedParens("expected ')' after token")
            stack.append([None, [], None])
            i += 1
            continue
        if c == 41:  # ')'
            if not stack:
                raise UnbalancedParens("unexpected ')'")
            top = <list>stack.pop()
            node = _finish(top, len(stack) > 0)
            if stack:
                (<list>(<list>stack[-1])[1]).append(node)
            else:
                root = node
            i += 1
            continue
        if root is not None:
            raise TrailingGarbage("content after the root tree")
        if not stack:
            raise UnbalancedParens("expected '('")
        start = i
        while i < n:
            c = s[i]
            if _is_ws(c) or c == 40 or c == 41:
                break
            i += 1
        tok = PyUnicode_DecodeUTF8(<const char*>(s + start), i - start, NULL)
        top = <list>stack[-1]
        if top[0] is None:
            top[0] = tok
        elif top[2] is None and not <list>top[1]:
            top[2] = tok
        else:
            raise UnbalancedParens("expected ')'")
    if stack:
        raise UnbalancedParens("unexpected end of input")
    if root is None:
        raise EmptyInput("no tree found in input")
    return root


# --- pointer expressions ---

cdef inline bint _is_conn(unsigned char c) noexcept:
    return c == 42 or c == 44 or c == 59  # '*' ',' ';'


cdef int _scan_uint(const unsigned char* s, Py_ssize_t a, Py_ssize_t b, long* out) noexcept:
    # digits in [a, b); canonical decimal (no leading zero); <= 18 digits
    cdef long v = 0
    cdef Py_ssize_t i
    if b <= a or b - a > 18:
        return -1
    if s[a] == 48 and b - a > 1:
        return -1
    for i in range(a, b):
        if s[i] < 48 or s[i] > 57:
            return -1
        v = v * 10 + (s[i] - 48)
    out[0] = v
    return 0


cdef int _scan_fragment(const unsigned char* s, Py_ssize_t i, Py_ssize_t n,
                        long* t, long* h, Py_ssize_t* endp) noexcept:
    # one "terminal:height" fragment starting at i, ending at a connector or n.
    # returns 0 ok, 1 empty fragment, 2 malformed.
    cdef Py_ssize_t end = i
    cdef Py_ssize_t colon = -1
    while end < n and not _is_conn(s[end]):
        if s[end] == 58:  # ':'
            colon = end if colon == -1 else -2
        end += 1
    endp[0] = end
    if end == i:
        return 1
    if colon < 0:
        return 2
    if _scan_uint(s, i, colon, t) < 0 or _scan_uint(s, colon + 1, end, h) < 0:
        return 2
    return 0


def parse_expr_parts(str text):
    """Scan a pointer expression into ((terminal, height) pairs, connector chars)."""
    cdef bytes data = text.encode("utf-8")
    cdef const unsigned char* s = data
    cdef Py_ssize_t n = len(data)
    cdef Py_ssize_t i = 0, end = 0
    cdef long t = 0, h = 0
    cdef int rc
    if n == 0:
        raise MalformedPointer("empty pointer expression")
    parts = []
    connectors = []
    while True:
        rc = _scan_fragment(s, i, n, &t, &h, &end)
        if rc == 1:
            raise EmptyFragment("empty pointer fragment in %r" % text)
        if rc == 2:
            raise MalformedPointer(
                "bad pointer %r in %r" % (data[i:end].decode("utf-8"), text)
            )
        parts.append((t, h))
        if end == n:
            break
        connectors.append(chr(s[end]))
        i = end + 1
    return parts, connectors


cdef Py_ssize_t _write_long(unsigned char* out, Py_ssize_t m, long v) noexcept:
    cdef unsigned char tmp[24]
    cdef int k = 0
    if v == 0:
        out[m] = 48
        return m + 1
    while v > 0:
        tmp[k] = 48 + (v % 10)
        v //= 10
        k += 1
    while k > 0:
        k -= 1
        out[m] = tmp[k]
        m += 1
    return m


cdef int _check_roundtrip(const unsigned char* s, Py_ssize_t n) noexcept:
    # parse with the same fragment scanner, re-format, compare.
    # returns 0 on identity, 1 on mismatch, -1 on scan failure.
    cdef long terms[8]
    cdef long heights[8]
    cdef unsigned char conns[8]
    cdef unsigned char out[256]
    cdef Py_ssize_t i = 0, end = 0, m = 0
    cdef int nparts = 0, rc, k
    while True:
        if nparts == 8:
            return -1
        rc = _scan_fragment(s, i, n, &terms[nparts], &heights[nparts], &end)
        if rc != 0:
            return -1
        nparts += 1
        if end == n:
            break
        conns[nparts - 1] = s[end]
        i = end + 1
    for k in range(nparts):
        if k > 0:
            out[m] = conns[k - 1]
            m += 1
        m = _write_long(out, m, terms[k])
        out[m] = 58
        m += 1
        m = _write_long(out, m, heights[k])
    if m != n or memcmp(out, s, n) != 0:
        return 1
    return 0


def roundtrip_exhaustive(int max_terminal, int max_height, int max_parts):
    """Check parse->format identity over every expression whose parts range
    over terminals 0..max_terminal and heights 0..max_height, with every
    connector combination up to max_parts parts.

    Returns (checked, mismatches, first_bad).
    """
    if max_parts < 1 or max_parts > 3:
        raise ValueError("exhaustive enumeration supports 1..3 parts")
    singles = [
        ("%d:%d" % (t, h)).encode("ascii")
        for t in range(max_terminal + 1)
        for h in range(max_height + 1)
    ]
    cdef int nsingle = len(singles)
    cdef bytes blob = b"".join(singles)
    cdef const unsigned char* base = blob
    cdef Py_ssize_t* offs = <Py_ssize_t*>malloc(nsingle * sizeof(Py_ssize_t))
    cdef Py_ssize_t* lens = <Py_ssize_t*>malloc(nsingle * sizeof(Py_ssize_t))
    if offs == NULL or lens == NULL:
        free(offs)
        free(lens)
        raise MemoryError()
    cdef Py_ssize_t total = 0
    cdef int k
    for k in range(nsingle):
        offs[k] = total
        lens[k] = len(<bytes>singles[k])
        total += lens[k]
    cdef unsigned char conns_c[3]
    conns_c[0] = 42  # *
    conns_c[1] = 44  # ,
    conns_c[2] = 59  # ;
    cdef unsigned char buf[256]
    cdef Py_ssize_t blen
    cdef long checked = 0, mismatches = 0
    cdef int p0, p1, p2, c0, c1, rc
    first_bad = None

    try:
        for p0 in range(nsingle):
            memcpy(buf, base + offs[p0], lens[p0])
            blen = lens[p0]
            checked += 1
            rc = _check_roundtrip(buf, blen)
            if rc != 0:
                mismatches += 1
                if first_bad is None:
                    first_bad = bytes(buf[:blen]).decode("ascii")

        if max_parts >= 2:
            for p0 in range(nsingle):
                for c0 in range(3):
                    memcpy(buf, base + offs[p0], lens[p0])
                    buf[lens[p0]] = conns_c[c0]
                    for p1 in range(nsingle):
                        memcpy(buf + lens[p0] + 1, base + offs[p1], lens[p1])
                        blen = lens[p0] + 1 + lens[p1]
                        checked += 1
                        rc = _check_roundtrip(buf, blen)
                        if rc != 0:
                            mismatches += 1
                            if first_bad is None:
                                first_bad = bytes(buf[:blen]).decode("ascii")

        if max_parts >= 3:
            for p0 in range(nsingle):
                for c0 in range(3):
                    memcpy(buf, base + offs[p0], lens[p0])
                    buf[lens[p0]] = conns_c[c0]
                    for p1 in range(nsingle):
                        memcpy(buf + lens[p0] + 1, base + offs[p1], lens[p1])
                        for c1 in range(3):
                            buf[lens[p0] + 1 + lens[p1]] = conns_c[c1]
                            for p2 in range(nsingle):
                                memcpy(
                                    buf + lens[p0] + 1 + lens[p1] + 1,
                                    base + offs[p2],
                                    lens[p2],
                                )
                                blen = lens[p0] + 1 + lens[p1] + 1 + lens[p2]
                                checked += 1
                                rc = _check_roundtrip(buf, blen)
                                if rc != 0:
                                    mismatches += 1
                                    if first_bad is None:
                                        first_bad = bytes(buf[:blen]).decode("ascii")
    finally:
        free(offs)
        free(lens)

    return checked, mismatches, first_bad
