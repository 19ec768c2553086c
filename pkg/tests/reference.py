"""Scalar pure-Python versions of every kernel, used as an independent oracle.

Written from the textbook formulas with the math module and explicit loops;
shares no code with the vectorised kernels.
"""

import math


def ackley(x, a=20.0, b=0.2, c=2 * math.pi):
    n = len(x)
    s1 = sum(v * v for v in x) / n
    s2 = sum(math.cos(c * v) for v in x) / n
    return -a * math.exp(-b * math.sqrt(s1)) - math.exp(s2) + a + math.e


def dejong3(x):
    return float(sum(math.floor(v) for v in x))


def dejong5(x):
    grid = [-32, -16, 0, 16, 32]
    total = 0.002
    for j in range(25):
        a1, a2 = grid[j % 5], grid[j // 5]
        total += 1.0 / (j + 1 + (x[0] - a1) ** 6 + (x[1] - a2) ** 6)
    return 1.0 / total


def easom(x):
    return -math.cos(x[0]) * math.cos(x[1]) * math.exp(-((x[0] - math.pi) ** 2) - (x[1] - math.pi) ** 2)


def eggholder(x):
    x1, x2 = x
    return -(x2 + 47) * math.sin(math.sqrt(abs(x1 / 2 + x2 + 47))) - x1 * math.sin(math.sqrt(abs(x1 - x2 - 47)))


def goldstein_price(x):
    x1, x2 = x
    a = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2)
    b = 30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2)
    return a * b


def griewank(x):
    s = sum(v * v for v in x) / 4000
    p = 1.0
    for i, v in enumerate(x, start=1):
        p *= math.cos(v / math.sqrt(i))
    return 1 + s - p


def hyperellipsoid(x):
    return sum(i * v * v for i, v in enumerate(x, start=1))


def hypersphere(x):
    return sum(v * v for v in x)


def keane(x):
    x1, x2 = x
    r = math.hypot(x1, x2)
    if r == 0:
        return 0.0
    return -(math.sin(x1 - x2) ** 2) * math.sin(x1 + x2) ** 2 / r


def martin_gaddy(x):
    x1, x2 = x
    return (x1 - x2) ** 2 + ((x1 + x2 - 10) / 3) ** 2


def mccormick(x):
    x1, x2 = x
    return math.sin(x1 + x2) + (x1 - x2) ** 2 - 1.5 * x1 + 2.5 * x2 + 1


def michalewicz(x, m=10.0):
    return -sum(math.sin(v) * math.sin(i * v * v / math.pi) ** (2 * m) for i, v in enumerate(x, start=1))


def picheny_goldstein_price(x):
    return (math.log(goldstein_price([4 * x[0] - 2, 4 * x[1] - 2])) - 8.693) / 2.427


def rana(x):
    x1, x2 = x
    t1 = math.sqrt(abs(x2 + 1 - x1))
    t2 = math.sqrt(abs(x1 + x2 + 1))
    return x1 * math.sin(t1) * math.cos(t2) + (x2 + 1) * math.cos(t1) * math.sin(t2)


def rastrigin(x, a=10.0):
    return a * len(x) + sum(v * v - a * math.cos(2 * math.pi * v) for v in x)


def rosenbrock(x):
    return sum(100 * (x[i + 1] - x[i] ** 2) ** 2 + (1 - x[i]) ** 2 for i in range(len(x) - 1))


def schaffer_n2(x):
    x1, x2 = x
    return 0.5 + (math.sin(x1**2 - x2**2) ** 2 - 0.5) / (1 + 0.001 * (x1**2 + x2**2)) ** 2


def schwefel(x):
    return -sum(v * math.sin(math.sqrt(abs(v))) for v in x)


def styblinski_tang(x):
    return 0.5 * sum(v**4 - 16 * v**2 + 5 * v for v in x)


REFERENCE = {
    "Ackley": ackley,
    "DeJong3": dejong3,
    "DeJong5": dejong5,
    "Easom": easom,
    "EggHolder": eggholder,
    "GoldsteinPrice": goldstein_price,
    "Griewank": griewank,
    "Hyperellipsoid": hyperellipsoid,
    "Hypersphere": hypersphere,
    "Keane": keane,
    "MartinGaddy": martin_gaddy,
    "McCormick": mccormick,
    "Michalewicz": michalewicz,
    "PichenyGoldsteinPrice": picheny_goldstein_price,
    "Rana": rana,
    "Rastrigin": rastrigin,
    "Rosenbrock": rosenbrock,
    "SchafferN2": schaffer_n2,
    "Schwefel": schwefel,
    "StyblinskiTang": styblinski_tang,
}
