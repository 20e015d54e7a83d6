from toric.cli.main import main
