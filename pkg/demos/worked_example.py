"""Walk through the five-step factorization of a degree-six bounded motion.

Run:  python3 demos/worked_example.py
"""
from motionfactor import EngineConfig, factor_all, verify
from motionfactor.parse import parse_expression

M = parse_expression(
    "(t^2 + 2t + 2)(t^2 + 1)^2"
    " + eps (-(t^2 + 2t + 2) i + (t^5 + t^4 + 2t^3 + t^2 - t - 1) j + (t^4 + t^2 - 2t - 1) k)")


def main():
    # pin the two free root choices so the run replays the published one
    result = factor_all(M, EngineConfig(directions=[(-1, 0, 0), (0, 0, -1)]))
    print("input:", M)
    print()
    for n, step in enumerate(result.trace, 1):
        roots = ", ".join(f"{name} = {val}" for name, val in (("h_l", step.h_l), ("h_r", step.h_r))
                          if val is not None)
        print(f"step {n}: comp = {step.complexity.as_tuple()}  branch = {step.branch}")
        if step.P1 is not None:
            print(f"        P1 = {step.P1}   {roots}")
    print()
    print("cofactor:", result.cofactor)
    for n, f in enumerate(result.factors, 1):
        print(f"  factor {n:2d}: {f}   ({f.kind})")
    print()
    print("cofactor * M == product of factors:", bool(verify(result, M)))


if __name__ == "__main__":
    main()
