from dateutil import parser


def parse(date: str):
    return parser.parse(date)
