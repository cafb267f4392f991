"""
@brief      test log(time=2s)
"""
import os
import unittest
from pyquickhelper.loghelper import fLOG
from pyquickhelper.pycode import get_temp_folder, ExtTestCase
from fuzzystab.cli.commands import COMMANDS


class TestReadme(ExtTestCase):

    def test_readme_commands(self):
        fLOG(__file__, self._testMethodName, OutputPrint=__name__ == "__main__")
        fold = os.path.dirname(os.path.abspath(__file__))
        readme = os.path.join(fold, "..", "..", "README.rst")
        self.assertExists(readme)
        with open(readme, "r", encoding="utf8") as f:
            content = f.read()
        for name in COMMANDS:
            self.assertIn("python -m fuzzystab {} ".format(name), content)
        self.assertIn("3 (falsified certificate", content)

        if __name__ != "__main__":
            # does not work from a virtual environment
            return

        from pyquickhelper.pycode import check_readme_syntax
        temp = get_temp_folder(__file__, "temp_readme")
        check_readme_syntax(readme, folder=temp, fLOG=fLOG)


if __name__ == "__main__":
    unittest.main()
