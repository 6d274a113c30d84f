"""Versioned JSON persistence for the coefficient tables.

One file holds the Littlewood-Richardson tables, straightening expansions and
quiver elements, all under canonical text keys.  A version mismatch or a
corrupt file is never an error: the caches simply start cold.
"""

import json
import sys

from . import gamma, quiver

VERSION = 1


def _ptext(p) -> str:
    return ",".join(str(x) for x in p)


def _parse_ptuple(text) -> tuple:
    return tuple(int(x) for x in text.split(",")) if text else ()


def save_cache(path: str) -> None:
    with gamma._lock:
        lr = {
            f"{_ptext(lam)}|{_ptext(mu)}": {_ptext(nu): c for nu, c in table.items()}
            for (lam, mu), table in gamma._lr_table_cache.items()
        }
        st = {
            _ptext(seq): {_ptext(lam): c for lam, c in table.items()}
            for seq, table in gamma._straighten_cache.items()
        }
    with quiver._lock:
        pr = {
            ";".join(str(x) for pair in key[1:] for x in pair) + f"@{key[0]}": [
                [[list(p) for p in mu], c] for mu, c in coeffs.items()
            ]
            for key, coeffs in quiver._pr_memo.items()
        }
    data = {"version": VERSION, "lr": lr, "straighten": st, "pr": pr}
    with open(path, "w") as fh:
        json.dump(data, fh, sort_keys=True)


def load_cache(path: str) -> bool:
    """Load tables; returns True on success, warns and leaves caches cold
    otherwise."""
    try:
        with open(path) as fh:
            data = json.load(fh)
        if data.get("version") != VERSION:
            print(f"cache {path}: version mismatch, ignoring", file=sys.stderr)
            return False
        lr = {}
        for key, table in data["lr"].items():
            a, b = key.split("|")
            lr[_parse_ptuple(a), _parse_ptuple(b)] = {
                _parse_ptuple(nu): int(c) for nu, c in table.items()
            }
        st = {}
        for key, table in data["straighten"].items():
            st[_parse_ptuple(key)] = {
                _parse_ptuple(lam): int(c) for lam, c in table.items()
            }
        pr = {}
        for key, items in data["pr"].items():
            body, n = key.rsplit("@", 1)
            nums = [int(x) for x in body.split(";") if x != ""]
            dkey = (int(n),) + tuple(
                (nums[i], nums[i + 1]) for i in range(0, len(nums), 2)
            )
            pr[dkey] = {
                tuple(tuple(p) for p in mu): int(c) for mu, c in items
            }
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"cache {path}: unreadable ({exc}), starting cold", file=sys.stderr)
        return False
    with gamma._lock:
        gamma._lr_table_cache.update(lr)
        gamma._straighten_cache.update(st)
    with quiver._lock:
        quiver._pr_memo.update(pr)
    return True
