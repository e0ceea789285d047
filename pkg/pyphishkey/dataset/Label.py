"""
PyPhishKey
"""
from typing import Optional


class Label:
    """
    The binary class labels. Phishing is the positive class everywhere.
    """
    PHISHING: int = 1
    LEGITIMATE: int = 0

    __names = {PHISHING: 'phishing', LEGITIMATE: 'legitimate'}

    __aliases = {'phishing':   PHISHING,
                 '1':          PHISHING,
                 'legitimate': LEGITIMATE,
                 '0':          LEGITIMATE}

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def parse(text: str) -> Optional[int]:
        """
        Returns the label denoted by a text (case insensitive: phishing, legitimate, 1, or 0), or None when the text is
        not recognized.

        :param str text: The text.

        :rtype: int|None
        """
        return Label.__aliases.get(str(text).strip().lower())

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def name(label: int) -> str:
        """
        Returns the name of a label.

        :param int label: The label.

        :rtype: str
        """
        return Label.__names[int(label)]

# ----------------------------------------------------------------------------------------------------------------------
