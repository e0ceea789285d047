"""
PyPhishKey
"""
from pyphishkey.application.PyPhishKeyApplication import PyPhishKeyApplication


def main() -> int:
    application = PyPhishKeyApplication()
    ret = application.run()

    return ret
