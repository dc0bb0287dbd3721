"""Smoke test for the pathbij Python extension.

Build and run:

    cargo build -p pathbij-py --release --features extension-module
    cp target/release/libpathbij_py.so python/pathbij.so
    python3 python/smoke_test.py
"""

import pathbij


def main():
    p = pathbij.Path("UUDUDUUDDD", "dyck")
    assert str(p) == "UUDUDUUDDD" and p.size == 5 and len(p) == 10
    assert p.matching_downstep(0) == 9
    assert pathbij.t1_forward("UUDUDUUDDD") == "UFUDD"
    assert pathbij.t1_inverse("UFUDD") == "UUDUDUUDDD"

    m = "UUDFUFDGDUDFUD"
    d = pathbij.t2_forward(m)
    assert d == "UUUDDUUUUDDDUDUDDDUUDDUUUDDUDD"
    stats = pathbij.statistics(d)
    assert (stats["udu_count"], stats["ddu_count"]) == (1, 5)
    assert pathbij.t2_inverse(d) == m
    assert pathbij.apply("t2", d, "inverse") == m

    b = pathbij.Path(m, "bicolored")
    assert [b.associated_downstep(i) for i in (3, 5, 11)] == [8, 6, None]

    assert pathbij.std_bijection("G") == "UDUD"
    assert pathbij.riordan_to_no_short_descent("UFD") == "UUUDDD"

    assert [pathbij.motzkin(n) for n in range(7)] == [1, 1, 2, 4, 9, 21, 51]
    assert [pathbij.riordan(n) for n in range(6)] == [1, 0, 1, 1, 3, 6]
    assert pathbij.catalan(60) == 1583850964596120042686772779038896
    assert pathbij.generate("dyck", 3) == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]
    assert pathbij.count_uuu_free(6) == pathbij.motzkin(6)
    assert [r[2] for r in pathbij.distribution_table("udu", 4)] == [4, 6, 3, 1]

    for bad in (lambda: pathbij.t1_forward("UUUDDD"), lambda: pathbij.Path("UDD", "motzkin")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        pathbij.catalan(200)
    except OverflowError:
        pass
    else:
        raise AssertionError("expected OverflowError")

    results = pathbij.verify(6)
    failed = [r for r in results if not r[1]]
    assert not failed, failed
    print(f"pathbij smoke test: ok ({len(results)} checks passed)")


if __name__ == "__main__":
    main()
