"""
Auditing the closed-form payoff
===============================

The analytic payoff against the state-vector pipeline, in both the corrected
form and the commonly printed one.
"""

from qhawkdove import HAWK, DOVE, make_payoff_matrix, payoff_closed_form, play, validate_closed_form

m = make_payoff_matrix(50, 100, 10)

for restrict in ("phi-zero", "named-vs-Q", "none"):
    for form in ("corrected", "printed"):
        r = validate_closed_form(5000, 1e-10, m, restrict=restrict, form=form)
        print(f"{restrict:11s} {form:9s} passed={r.passed!s:5s} max deviation={r.max_deviation:.3g}")

# The smallest counterexample: hawk against dove without entanglement.
print("pipeline:", play(HAWK, DOVE, 0.0, m).payoff_row)
print("printed :", payoff_closed_form(HAWK, DOVE, 0.0, m, form="printed"))
