"""Three small motions where a real cofactor is needed, or where factoring fails.

Run:  python3 demos/cofactor_needed.py
"""
from motionfactor import factor_all, gfactor, is_bounded, verify
from motionfactor.errors import MotionFactorError
from motionfactor.parse import parse_expression as px


def show(title, m):
    print(f"== {title}: {m}")
    try:
        gfactor(m)
        print("   factors without a cofactor")
    except MotionFactorError as exc:
        print(f"   no direct factorization ({type(exc).__name__})")
    if not is_bounded(m):
        print("   unbounded: trajectories reach infinity, no rotation factorization exists")
        return
    f = factor_all(m)
    print(f"   cofactor {f.cofactor}")
    for lf in f.factors:
        print(f"     {lf}")
    print(f"   verified: {bool(verify(f, m))}")


def main():
    show("translation along a fixed direction", px("t^2 + 1 + eps i"))
    show("circular translation", px("t^2 - eps j t + 1 - eps i"))
    show("vertical Darboux motion", px("(t^2 + 1)(t - i) - i (5/2 t - 3/4) eps (t - i)"))
    show("two prismatic joints", px("t^2 - (1 + j) t + j - eps ((i + k) t - 2k)"))


if __name__ == "__main__":
    main()
