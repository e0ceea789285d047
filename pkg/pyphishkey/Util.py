"""
PyPhishKey
"""
import os
from typing import Optional

from pyphishkey.style.PyPhishKeyStyle import PyPhishKeyStyle


class Util:
    """
    A helper class with miscellaneous functions that don't belong somewhere else.
    """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def write_two_phases(filename: str, data: str, io: Optional[PyPhishKeyStyle] = None) -> bool:
        """
        Writes a file in two phases to the filesystem.

        First writes the data to a temporary file (in the same directory) and then renames the temporary file. If the
        file already exists and its content is equal to the data that must be written no action is taken.

        Returns True if the file has been (re)written.

        :param str filename: The name of the file were the data must be stored.
        :param str data: The data that must be written.
        :param PyPhishKeyStyle|None io: The output decorator.

        :rtype: bool
        """
        directory = os.path.dirname(filename)
        if directory:
            os.makedirs(directory, exist_ok=True)

        write_flag = True
        if os.path.exists(filename):
            with open(filename, 'r', encoding='utf-8', errors='surrogateescape', newline='') as file:
                old_data = file.read()
                if data == old_data:
                    write_flag = False

        if write_flag:
            tmp_filename = filename + '.tmp'
            with open(tmp_filename, 'w', encoding='utf-8', errors='surrogateescape', newline='') as file:
                file.write(data)
            os.replace(tmp_filename, filename)
            if io:
                io.text('Wrote: <fso>{0}</fso>'.format(filename))
        else:
            if io:
                io.log_verbose('File <fso>{0}</fso> is up to date'.format(filename))

        return write_flag

# ----------------------------------------------------------------------------------------------------------------------
