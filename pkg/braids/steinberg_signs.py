"""
Root-vector sign flips of the D_n matrix model.

Generated by `python manage.py calibrate --write`; do not edit by hand.
"""

ROOT_SIGN_FLIPS = {
    'D3': ('-e2+e3',),
    'D4': ('-e2+e3',),
    'D5': ('-e2+e3', '-e4+e5'),
    'D6': ('-e2+e3', '-e4+e5'),
}
