"""Sample a point orbit, then make an unbounded motion bounded by substitution.

Run:  python3 demos/trajectory_and_reparam.py
"""
from fractions import Fraction

from motionfactor import Point, RPoly, factor_all, is_bounded, reparameterize, trajectory, verify
from motionfactor.parse import parse_expression as px


def main():
    m = px("(t - i)(t - j + eps k)")
    samples = [Fraction(n, 2) for n in range(-4, 5)]
    for s, p in zip(samples, trajectory(m, Point(0, 0, 1), samples)):
        dist = sum(c * c for c in p)
        print(f"t = {str(s):>4}: ({', '.join(str(c) for c in p)})   |x|^2 = {dist}")

    prismatic = px("t^2 - (1 + j) t + j - eps ((i + k) t - 2k)")
    print("\nprismatic motion bounded?", is_bounded(prismatic))
    # t -> r/q never takes the singular value 1 because r - q = t^2 + 5 > 0, and
    # r + iq = (t - i)(t + 2 + 3i) keeps every norm quadratic rationally solvable
    r, q = RPoly([3, 2, 1]), RPoly([-2, 2])
    bounded = reparameterize(prismatic, r, q)
    print("after substitution:", bounded)
    print("bounded now?", is_bounded(bounded))
    f = factor_all(bounded)
    print("cofactor", f.cofactor, "with", len(f.factors), "rotation factors; verified:",
          bool(verify(f, bounded)))


if __name__ == "__main__":
    main()
