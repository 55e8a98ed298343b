import sys
import time

from mixnorm import verify

name = sys.argv[1]
t0 = time.time()
rep = verify.run_suite(name)
print("elapsed", round(time.time() - t0, 1))
print(rep.summary)
for c in rep.checks:
    flag = "PASS" if c.passed else (
        "IND " if getattr(c, "indeterminate", False) else "FAIL"
    )
    if hasattr(c, "margin"):
        print(flag, c.check_id, "margin=%.3g" % c.margin, list(c.notes)[:2])
    else:
        print(flag, c.check_id, "exp=%.4f" % c.exponent,
              "resid=%.3g" % c.residual, "expected", c.expected,
              list(c.notes)[:2])
