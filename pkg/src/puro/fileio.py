"""Binary checkpoint files for resumable enumerations.

Layout: magic b"PURO1", one version byte, then records.  Each record is a
big-endian u32 length followed by that many payload bytes; the first payload
byte is the record kind.
"""
from __future__ import annotations

import os
import struct

MAGIC = b"PURO1"
VERSION = 1

HEADER, DONE, HVEC = 1, 2, 3


class CheckpointError(ValueError):
    pass


def _pack_header(r: int, e: int, t: int) -> bytes:
    return bytes([HEADER]) + struct.pack(">III", r, e, t)


def _pack_prefix(gens) -> bytes:
    gens = list(gens)
    n = len(gens[0]) if gens else 0
    body = struct.pack(">HH", len(gens), n)
    for g in gens:
        body += struct.pack(f">{n}H", *g)
    return bytes([DONE]) + body


def _pack_h(h) -> bytes:
    return bytes([HVEC]) + struct.pack(f">H{len(h)}Q", len(h), *h)


def _unpack(payload: bytes):
    kind = payload[0]
    body = payload[1:]
    if kind == HEADER:
        return kind, struct.unpack(">III", body)
    if kind == DONE:
        k, n = struct.unpack(">HH", body[:4])
        vals = struct.unpack(f">{k * n}H", body[4:4 + 2 * k * n])
        return kind, tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(k))
    if kind == HVEC:
        (k,) = struct.unpack(">H", body[:2])
        return kind, struct.unpack(f">{k}Q", body[2:2 + 8 * k])
    raise CheckpointError(f"unknown record kind {kind}")


class Checkpoint:
    """Append-only record log of finished search branches and found h-vectors."""

    def __init__(self, path, r: int, e: int, t: int):
        self.path = path
        self.key = (r, e, t)
        self.done: set = set()
        self.found: set = set()
        if os.path.exists(path) and os.path.getsize(path) > 0:
            self._load()
        else:
            with open(path, "wb") as fh:
                fh.write(MAGIC + bytes([VERSION]))
                self._write(fh, _pack_header(r, e, t))

    @staticmethod
    def _write(fh, payload: bytes):
        fh.write(struct.pack(">I", len(payload)) + payload)

    def _load(self):
        with open(self.path, "rb") as fh:
            data = fh.read()
        if data[:5] != MAGIC:
            raise CheckpointError("bad magic")
        if data[5] != VERSION:
            raise CheckpointError(f"unsupported checkpoint version {data[5]}")
        pos = 6
        header = None
        while pos + 4 <= len(data):
            (size,) = struct.unpack(">I", data[pos:pos + 4])
            payload = data[pos + 4:pos + 4 + size]
            if len(payload) < size:
                break  # torn final record
            pos += 4 + size
            kind, value = _unpack(payload)
            if kind == HEADER:
                header = value
            elif kind == DONE:
                self.done.add(value)
            else:
                self.found.add(tuple(value))
        if header != self.key:
            raise CheckpointError(f"checkpoint is for {header}, not {self.key}")
        if pos < len(data):
            # drop the torn tail so later appends start on a record boundary
            with open(self.path, "r+b") as fh:
                fh.truncate(pos)

    def finish_branch(self, prefix, new_h):
        with open(self.path, "ab") as fh:
            for h in sorted(new_h):
                self._write(fh, _pack_h(h))
            self._write(fh, _pack_prefix(prefix))
        self.found |= set(new_h)
        self.done.add(tuple(tuple(g) for g in prefix))
